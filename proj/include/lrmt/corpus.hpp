// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Parallel and monolingual corpus model: ingestion (aligned line files,
// TSV), deduplication, length/ratio filtering, merging, per-source
// statistics and deterministic splitting. Corpora are immutable values;
// every operation returns a new corpus.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrmt/language.hpp"

namespace lrmt {

enum class Origin : std::uint8_t { WMT, BPCC, PMIndia, OLD, BackTranslated, Other };

std::string to_string(Origin origin);
Origin origin_from_string(std::string_view text);  // throws InvalidConfig

enum class SyntheticSide : std::uint8_t { None, Source, Target };

std::string to_string(SyntheticSide side);
SyntheticSide synthetic_side_from_string(std::string_view text);

struct SentencePair {
  std::string source_text;  // cleaned
  std::string target_text;  // cleaned
  Origin origin = Origin::Other;
  SyntheticSide synthetic_side = SyntheticSide::None;
};

// Either a parallel corpus of sentence pairs with uniform language
// direction, or a monolingual corpus of cleaned lines.
class Corpus {
 public:
  static Corpus parallel(LanguageTag source_lang, LanguageTag target_lang,
                         std::string provenance = {});
  static Corpus monolingual(LanguageTag lang, std::string provenance = {});

  bool is_parallel() const { return parallel_; }
  std::size_t size() const {
    return parallel_ ? pairs_.size() : lines_.size();
  }
  bool empty() const { return size() == 0; }

  const LanguageTag& source_lang() const { return source_lang_; }
  const LanguageTag& target_lang() const { return target_lang_; }
  const LanguageTag& mono_lang() const { return source_lang_; }
  const std::string& provenance() const { return provenance_; }

  const std::vector<SentencePair>& pairs() const;
  const std::vector<std::string>& lines() const;

  // Enforces the pair invariants (synthetic_side vs origin); text is
  // stored as given, callers clean it first.
  void add_pair(SentencePair pair);
  void add_line(std::string line);

 private:
  Corpus() = default;

  bool parallel_ = true;
  LanguageTag source_lang_;  // mono corpora use source_lang_ as their language
  LanguageTag target_lang_;
  std::string provenance_;
  std::vector<SentencePair> pairs_;
  std::vector<std::string> lines_;
};

// --- ingestion ------------------------------------------------------------

// Reads one UTF-8 file per side, one sentence per line, i-th lines
// aligned. Lines are cleaned. Throws LineCountMismatch, IoError, Utf8Error.
Corpus ingest_parallel(const std::filesystem::path& source_file,
                       const std::filesystem::path& target_file,
                       const LanguageTag& source_lang,
                       const LanguageTag& target_lang, Origin origin,
                       int jobs = 1);

// Reads a two-column tab-separated file. Throws MalformedRow on rows
// without exactly two columns.
Corpus ingest_tsv(const std::filesystem::path& file,
                  const LanguageTag& source_lang,
                  const LanguageTag& target_lang, Origin origin, int jobs = 1);

// Reads a monolingual file, one sentence per line, cleaned.
Corpus ingest_mono(const std::filesystem::path& file, const LanguageTag& lang,
                   int jobs = 1);

// Reads raw UTF-8 lines with validation (no cleaning).
std::vector<std::string> read_utf8_lines(const std::filesystem::path& file);

// --- transforms -----------------------------------------------------------

struct DedupResult {
  Corpus corpus;
  std::size_t removed = 0;
};

// Keeps the first occurrence of each exact (source_text, target_text) pair.
DedupResult dedup(const Corpus& corpus);

struct FilterConfig {
  std::uint64_t min_chars = 1;
  std::uint64_t max_chars = 2000;
  double max_len_ratio = 3.0;
};

struct FilterResult {
  Corpus corpus;
  std::size_t dropped_short = 0;
  std::size_t dropped_long = 0;
  std::size_t dropped_ratio = 0;

  std::size_t dropped() const {
    return dropped_short + dropped_long + dropped_ratio;
  }
};

// Drops pairs whose side lengths (Unicode scalar values) fall outside
// [min_chars, max_chars] or whose length ratio exceeds max_len_ratio.
// A pair failing several rules is counted under the first one (short,
// then long, then ratio). Throws InvalidConfig.
FilterResult filter_pairs(const Corpus& corpus, const FilterConfig& config);

// Concatenates parallel corpora with identical direction.
// Throws LanguageMismatch.
Corpus merge(const std::vector<Corpus>& corpora);

// Deterministic shuffle-and-split; |dev| = floor(n * dev_fraction).
// Returns (train, dev). Throws InvalidConfig unless 0 <= dev_fraction < 1.
std::pair<Corpus, Corpus> split(const Corpus& corpus, double dev_fraction,
                                std::uint64_t seed);

// --- statistics -----------------------------------------------------------

struct SourceBreakdown {
  // key: (language rendered tag, origin) -> pair count; the language of a
  // pair is its non-English side (target side when neither or both are).
  std::map<std::pair<std::string, Origin>, std::size_t> counts;
  std::map<std::string, std::size_t> totals;
  std::map<std::string, std::size_t> mono_lines;

  std::size_t count(const std::string& lang, Origin origin) const {
    auto it = counts.find({lang, origin});
    return it == counts.end() ? 0 : it->second;
  }
};

SourceBreakdown stats(const std::vector<Corpus>& corpora);

// --- canonical JSONL ------------------------------------------------------

// One object per pair:
// {"src":...,"tgt":...,"src_lang":"asm_Beng","tgt_lang":"eng_Latn",
//  "origin":"WMT","synthetic_side":"none"}
void write_jsonl(const Corpus& corpus, std::ostream& out);
void write_jsonl_file(const Corpus& corpus, const std::filesystem::path& path);
std::string pair_to_jsonl(const SentencePair& pair,
                          const LanguageTag& source_lang,
                          const LanguageTag& target_lang);

// Reads canonical JSONL back; direction is taken from the first pair and
// enforced uniform. Throws IoError / LanguageMismatch.
Corpus read_jsonl_file(const std::filesystem::path& path);

// Character count in Unicode scalar values.
std::uint64_t scalar_length(std::string_view text);

}  // namespace lrmt
