// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/backtranslate.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "lrmt/errors.hpp"
#include "lrmt/normalize.hpp"
#include "lrmt/unicode.hpp"

namespace lrmt {

std::vector<std::string> MockEngine::translate(
    const std::vector<std::string>& texts, const LanguageTag&,
    const LanguageTag&) {
  if (mode_ == Mode::Identity) return texts;
  std::vector<std::string> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    std::u32string cps = uni::decode_utf8_or_throw(text);
    std::reverse(cps.begin(), cps.end());
    out.push_back(uni::encode_utf8(cps));
  }
  return out;
}

std::unique_ptr<EngineClient> make_engine(const std::string& spec) {
  if (spec == "mock") {
    return std::make_unique<MockEngine>(MockEngine::Mode::Identity);
  }
  if (spec == "mock-rev") {
    return std::make_unique<MockEngine>(MockEngine::Mode::ReverseCipher);
  }
  if (spec.rfind("http://", 0) == 0 || spec.rfind("https://", 0) == 0) {
    return make_http_engine(spec);
  }
  throw InvalidConfig("unknown engine '" + spec +
                      "' (expected mock, mock-rev or an http URL)");
}

namespace {

std::vector<std::string> translate_with_retry(EngineClient& engine,
                                              std::vector<std::string> texts,
                                              const LanguageTag& src,
                                              const LanguageTag& tgt,
                                              const RetryPolicy& retry) {
  std::chrono::milliseconds backoff = retry.initial_backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= std::max(1, retry.max_attempts); ++attempt) {
    try {
      std::vector<std::string> result = engine.translate(texts, src, tgt);
      if (result.size() != texts.size()) {
        throw ProtocolViolation(texts.size(), result.size());
      }
      return result;
    } catch (const EngineTransient& e) {
      last_error = e.what();
      if (attempt == retry.max_attempts) break;
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(static_cast<long long>(
          static_cast<double>(backoff.count()) * retry.multiplier));
    }
  }
  throw EngineUnavailable("engine '" + engine.id() + "' failed after " +
                          std::to_string(retry.max_attempts) +
                          " attempts: " + last_error);
}

}  // namespace

std::vector<std::string> translate_batch(EngineClient& engine,
                                         std::span<const std::string> lines,
                                         const LanguageTag& source_lang,
                                         const LanguageTag& target_lang,
                                         std::size_t batch_size,
                                         int max_in_flight,
                                         const RetryPolicy& retry) {
  if (batch_size < 1) throw InvalidConfig("batch_size must be >= 1");
  if (max_in_flight < 1) throw InvalidConfig("max_in_flight must be >= 1");
  if (lines.empty()) return {};

  const std::size_t n_batches = (lines.size() + batch_size - 1) / batch_size;
  std::vector<std::vector<std::string>> results(n_batches);

  auto run_batch = [&](std::size_t b) {
    std::size_t begin = b * batch_size;
    std::size_t end = std::min(lines.size(), begin + batch_size);
    std::vector<std::string> texts(lines.begin() + begin, lines.begin() + end);
    results[b] = translate_with_retry(engine, std::move(texts), source_lang,
                                      target_lang, retry);
  };

  if (max_in_flight == 1 || n_batches == 1) {
    for (std::size_t b = 0; b < n_batches; ++b) run_batch(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(max_in_flight), n_batches);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        while (!failed.load()) {
          std::size_t b = next.fetch_add(1);
          if (b >= n_batches) break;
          try {
            run_batch(b);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
          }
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  std::vector<std::string> out;
  out.reserve(lines.size());
  for (auto& batch : results) {
    for (auto& text : batch) out.push_back(std::move(text));
  }
  return out;
}

Corpus select_budget(const Corpus& mono, const BudgetSpec& budget) {
  if (mono.is_parallel()) {
    throw InvalidConfig("select_budget needs a monolingual corpus");
  }
  Corpus out = Corpus::monolingual(mono.mono_lang(), mono.provenance());
  std::uint64_t used = 0;
  for (const std::string& line : mono.lines()) {
    std::uint64_t len = scalar_length(line);
    if (used + len > budget.char_budget) break;
    used += len;
    out.add_line(line);
  }
  return out;
}

Corpus build_synthetic(std::span<const std::string> mono_lines,
                       std::span<const std::string> translations,
                       const LanguageTag& mono_lang,
                       const LanguageTag& engine_lang) {
  if (mono_lines.size() != translations.size()) {
    throw LengthMismatch(mono_lines.size(), translations.size());
  }
  Corpus out = Corpus::parallel(engine_lang, mono_lang, "back-translation");
  for (std::size_t i = 0; i < mono_lines.size(); ++i) {
    // engine output is external input: clean it; mono lines already are
    out.add_pair({clean_line(translations[i]), mono_lines[i],
                  Origin::BackTranslated, SyntheticSide::Source});
  }
  return out;
}

BtResult bt_iterate(const Corpus& mono,
                    const std::vector<BtScheduleStep>& schedule,
                    const EngineResolver& resolve, const BtOptions& options) {
  if (schedule.empty()) throw InvalidConfig("back-translation schedule is empty");
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (schedule[k].budget.char_budget <= schedule[k - 1].budget.char_budget) {
      throw InvalidConfig("schedule budgets must be strictly increasing");
    }
  }
  if (mono.is_parallel()) {
    throw InvalidConfig("bt_iterate needs a monolingual corpus");
  }

  BtResult result{Corpus::parallel(options.engine_lang, mono.mono_lang(),
                                   "back-translation of " + mono.provenance()),
                  {}};
  std::size_t translated_upto = 0;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    std::size_t prefix = select_budget(mono, schedule[k].budget).size();
    std::size_t begin = translated_upto;
    std::size_t end = std::max(prefix, begin);
    std::span<const std::string> delta(mono.lines().data() + begin, end - begin);
    translated_upto = end;

    EngineClient& engine = resolve(schedule[k].engine_id);
    std::vector<std::string> translations = translate_batch(
        engine, delta, mono.mono_lang(), options.engine_lang,
        options.batch_size, options.max_in_flight, options.retry);
    Corpus synthetic = build_synthetic(delta, translations, mono.mono_lang(),
                                       options.engine_lang);
    std::size_t dropped = 0;
    if (options.filter) {
      FilterResult filtered = filter_pairs(synthetic, *options.filter);
      dropped = filtered.dropped();
      synthetic = std::move(filtered.corpus);
    }
    for (const SentencePair& pair : synthetic.pairs()) {
      result.corpus.add_pair(pair);
    }
    result.records.push_back({static_cast<int>(k + 1), engine.id(),
                              delta.size(), synthetic.size(), dropped, begin,
                              end});
  }
  return result;
}

void write_audit_log(const std::vector<BtIterationRecord>& records,
                     std::ostream& out) {
  for (const BtIterationRecord& r : records) {
    nlohmann::json j{
        {"iteration", r.iteration},
        {"engine_id", r.engine_id},
        {"input_lines", r.input_lines},
        {"produced_pairs", r.produced_pairs},
        {"dropped_by_filter", r.dropped_by_filter},
        {"line_start", r.line_start},
        {"line_end", r.line_end},
    };
    out << j.dump() << '\n';
  }
}

}  // namespace lrmt
