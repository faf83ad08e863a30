// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Back-translation: budgeted selection of monolingual text, batched
// translation through an engine (HTTP wire protocol or built-in mock),
// synthetic pair construction and iterative corpus growth with an audit
// trail.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lrmt/corpus.hpp"

namespace lrmt {

struct BudgetSpec {
  std::uint64_t char_budget = 0;  // Unicode scalar values, newlines excluded
};

// A translation engine taking one batch at a time. Implementations throw
// EngineTransient for retryable failures (transport, non-200, malformed
// body); translate_batch handles retries and turns persistent failure
// into EngineUnavailable.
class EngineClient {
 public:
  virtual ~EngineClient() = default;
  virtual std::vector<std::string> translate(
      const std::vector<std::string>& texts, const LanguageTag& source_lang,
      const LanguageTag& target_lang) = 0;
  virtual std::string id() const = 0;
};

// Offline engine for tests and dry runs: either echoes its input or
// applies a reversible cipher (reverses the code point sequence).
class MockEngine : public EngineClient {
 public:
  enum class Mode { Identity, ReverseCipher };
  explicit MockEngine(Mode mode = Mode::Identity) : mode_(mode) {}
  std::vector<std::string> translate(const std::vector<std::string>& texts,
                                     const LanguageTag& source_lang,
                                     const LanguageTag& target_lang) override;
  std::string id() const override {
    return mode_ == Mode::Identity ? "mock" : "mock-rev";
  }

 private:
  Mode mode_;
};

// POST {base_url}/translate with {"texts":[...],"src_lang":...,"tgt_lang":...},
// expects {"translations":[...]}.
std::unique_ptr<EngineClient> make_http_engine(const std::string& base_url);

// "mock", "mock-rev", or an http(s) URL.
std::unique_ptr<EngineClient> make_engine(const std::string& spec);

struct RetryPolicy {
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{50};
  double multiplier = 2.0;
};

// Splits lines into batches of `batch_size`, runs up to `max_in_flight`
// batches concurrently and reassembles results in input order. Failed
// batches are retried with exponential backoff; a response of the wrong
// length raises ProtocolViolation immediately.
std::vector<std::string> translate_batch(EngineClient& engine,
                                         std::span<const std::string> lines,
                                         const LanguageTag& source_lang,
                                         const LanguageTag& target_lang,
                                         std::size_t batch_size,
                                         int max_in_flight,
                                         const RetryPolicy& retry = {});

// Longest prefix of the monolingual corpus whose cumulative character
// count stays within the budget; the line that would cross it is excluded.
Corpus select_budget(const Corpus& mono, const BudgetSpec& budget);

// Pairs translation i (synthetic source, in engine_lang) with monolingual
// line i (authentic target); origin BackTranslated, synthetic_side Source.
Corpus build_synthetic(std::span<const std::string> mono_lines,
                       std::span<const std::string> translations,
                       const LanguageTag& mono_lang,
                       const LanguageTag& engine_lang);

struct BtIterationRecord {
  int iteration = 1;  // 1-based
  std::string engine_id;
  std::size_t input_lines = 0;
  std::size_t produced_pairs = 0;
  std::size_t dropped_by_filter = 0;
  // Half-open range of monolingual line indexes translated this iteration;
  // ranges across iterations are disjoint by construction.
  std::size_t line_start = 0;
  std::size_t line_end = 0;
};

struct BtScheduleStep {
  BudgetSpec budget;
  std::string engine_id;
};

struct BtOptions {
  std::size_t batch_size = 32;
  int max_in_flight = 1;
  std::optional<FilterConfig> filter;  // nullopt: filtering off
  RetryPolicy retry;
  LanguageTag engine_lang = LanguageTag::parse("eng_Latn");
};

using EngineResolver = std::function<EngineClient&(const std::string& id)>;

struct BtResult {
  Corpus corpus;
  std::vector<BtIterationRecord> records;
};

// Iteration k selects the k-th budget's prefix, translates only the lines
// not translated before, builds synthetic pairs, filters, and appends.
// Budgets must be strictly increasing.
BtResult bt_iterate(const Corpus& mono,
                    const std::vector<BtScheduleStep>& schedule,
                    const EngineResolver& resolve, const BtOptions& options);

// One JSON object per iteration record.
void write_audit_log(const std::vector<BtIterationRecord>& records,
                     std::ostream& out);

}  // namespace lrmt
