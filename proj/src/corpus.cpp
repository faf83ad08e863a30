// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <unordered_set>

#include "lrmt/errors.hpp"
#include "lrmt/normalize.hpp"
#include "lrmt/unicode.hpp"
#include "parallel.hpp"

namespace lrmt {

std::string to_string(Origin origin) {
  switch (origin) {
    case Origin::WMT: return "WMT";
    case Origin::BPCC: return "BPCC";
    case Origin::PMIndia: return "PMIndia";
    case Origin::OLD: return "OLD";
    case Origin::BackTranslated: return "BackTranslated";
    case Origin::Other: return "Other";
  }
  return "Other";
}

Origin origin_from_string(std::string_view text) {
  if (text == "WMT") return Origin::WMT;
  if (text == "BPCC") return Origin::BPCC;
  if (text == "PMIndia") return Origin::PMIndia;
  if (text == "OLD") return Origin::OLD;
  if (text == "BackTranslated") return Origin::BackTranslated;
  if (text == "Other") return Origin::Other;
  throw InvalidConfig("unknown origin '" + std::string(text) +
                      "' (expected WMT, BPCC, PMIndia, OLD, BackTranslated "
                      "or Other)");
}

std::string to_string(SyntheticSide side) {
  switch (side) {
    case SyntheticSide::None: return "none";
    case SyntheticSide::Source: return "source";
    case SyntheticSide::Target: return "target";
  }
  return "none";
}

SyntheticSide synthetic_side_from_string(std::string_view text) {
  if (text == "none") return SyntheticSide::None;
  if (text == "source") return SyntheticSide::Source;
  if (text == "target") return SyntheticSide::Target;
  throw InvalidConfig("unknown synthetic_side '" + std::string(text) + "'");
}

Corpus Corpus::parallel(LanguageTag source_lang, LanguageTag target_lang,
                        std::string provenance) {
  if (source_lang == target_lang) {
    throw InvalidConfig("parallel corpus needs two distinct languages, got " +
                        source_lang.rendered() + " on both sides");
  }
  Corpus c;
  c.parallel_ = true;
  c.source_lang_ = std::move(source_lang);
  c.target_lang_ = std::move(target_lang);
  c.provenance_ = std::move(provenance);
  return c;
}

Corpus Corpus::monolingual(LanguageTag lang, std::string provenance) {
  Corpus c;
  c.parallel_ = false;
  c.source_lang_ = std::move(lang);
  c.provenance_ = std::move(provenance);
  return c;
}

const std::vector<SentencePair>& Corpus::pairs() const {
  if (!parallel_) throw InvalidConfig("monolingual corpus has no pairs");
  return pairs_;
}

const std::vector<std::string>& Corpus::lines() const {
  if (parallel_) throw InvalidConfig("parallel corpus has no bare lines");
  return lines_;
}

void Corpus::add_pair(SentencePair pair) {
  if (!parallel_) throw InvalidConfig("cannot add a pair to a monolingual corpus");
  bool synthetic = pair.synthetic_side != SyntheticSide::None;
  bool back_translated = pair.origin == Origin::BackTranslated;
  if (synthetic != back_translated) {
    throw InvalidConfig("synthetic_side must be set exactly for "
                        "BackTranslated pairs");
  }
  pairs_.push_back(std::move(pair));
}

void Corpus::add_line(std::string line) {
  if (parallel_) throw InvalidConfig("cannot add a bare line to a parallel corpus");
  lines_.push_back(std::move(line));
}

// --- ingestion ------------------------------------------------------------

std::vector<std::string> read_utf8_lines(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t nl = content.find('\n', start);
    if (nl == std::string::npos) {
      if (start < content.size()) lines.push_back(content.substr(start));
      break;
    }
    lines.push_back(content.substr(start, nl - start));
    start = nl + 1;
  }
  std::u32string scratch;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!uni::decode_utf8(lines[i], scratch)) {
      throw Utf8Error(file.string(), i + 1);
    }
  }
  return lines;
}

namespace {

std::vector<std::string> clean_all(std::vector<std::string> lines, int jobs) {
  detail::parallel_for(lines.size(), jobs, [&](std::size_t i) {
    lines[i] = clean_line(lines[i]);
  });
  return lines;
}

}  // namespace

Corpus ingest_parallel(const std::filesystem::path& source_file,
                       const std::filesystem::path& target_file,
                       const LanguageTag& source_lang,
                       const LanguageTag& target_lang, Origin origin,
                       int jobs) {
  std::vector<std::string> src = read_utf8_lines(source_file);
  std::vector<std::string> tgt = read_utf8_lines(target_file);
  if (src.size() != tgt.size()) throw LineCountMismatch(src.size(), tgt.size());
  src = clean_all(std::move(src), jobs);
  tgt = clean_all(std::move(tgt), jobs);
  Corpus corpus = Corpus::parallel(source_lang, target_lang,
                                   source_file.string() + " + " +
                                       target_file.string());
  for (std::size_t i = 0; i < src.size(); ++i) {
    corpus.add_pair({std::move(src[i]), std::move(tgt[i]), origin,
                     SyntheticSide::None});
  }
  return corpus;
}

Corpus ingest_tsv(const std::filesystem::path& file,
                  const LanguageTag& source_lang,
                  const LanguageTag& target_lang, Origin origin, int jobs) {
  std::vector<std::string> rows = read_utf8_lines(file);
  std::vector<std::string> src(rows.size()), tgt(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t first = rows[i].find('\t');
    if (first == std::string::npos || rows[i].find('\t', first + 1) != std::string::npos) {
      throw MalformedRow(i + 1);
    }
    src[i] = rows[i].substr(0, first);
    tgt[i] = rows[i].substr(first + 1);
  }
  src = clean_all(std::move(src), jobs);
  tgt = clean_all(std::move(tgt), jobs);
  Corpus corpus = Corpus::parallel(source_lang, target_lang, file.string());
  for (std::size_t i = 0; i < src.size(); ++i) {
    corpus.add_pair({std::move(src[i]), std::move(tgt[i]), origin,
                     SyntheticSide::None});
  }
  return corpus;
}

Corpus ingest_mono(const std::filesystem::path& file, const LanguageTag& lang,
                   int jobs) {
  std::vector<std::string> lines =
      clean_all(read_utf8_lines(file), jobs);
  Corpus corpus = Corpus::monolingual(lang, file.string());
  for (auto& line : lines) corpus.add_line(std::move(line));
  return corpus;
}

// --- transforms -----------------------------------------------------------

DedupResult dedup(const Corpus& corpus) {
  // \x1F cannot occur in cleaned text, so the joined key is unambiguous.
  std::unordered_set<std::string> seen;
  Corpus out = Corpus::parallel(corpus.source_lang(), corpus.target_lang(),
                                corpus.provenance());
  std::size_t removed = 0;
  for (const SentencePair& pair : corpus.pairs()) {
    std::string key = pair.source_text + '\x1F' + pair.target_text;
    if (seen.insert(std::move(key)).second) {
      out.add_pair(pair);
    } else {
      ++removed;
    }
  }
  return {std::move(out), removed};
}

FilterResult filter_pairs(const Corpus& corpus, const FilterConfig& config) {
  if (config.min_chars > config.max_chars) {
    throw InvalidConfig("filter: min_chars > max_chars");
  }
  if (config.max_len_ratio < 1.0) {
    throw InvalidConfig("filter: max_len_ratio must be >= 1");
  }
  FilterResult result{Corpus::parallel(corpus.source_lang(),
                                       corpus.target_lang(),
                                       corpus.provenance()),
                      0, 0, 0};
  for (const SentencePair& pair : corpus.pairs()) {
    std::uint64_t ls = scalar_length(pair.source_text);
    std::uint64_t lt = scalar_length(pair.target_text);
    if (ls < config.min_chars || lt < config.min_chars) {
      ++result.dropped_short;
      continue;
    }
    if (ls > config.max_chars || lt > config.max_chars) {
      ++result.dropped_long;
      continue;
    }
    std::uint64_t lo = std::min(ls, lt);
    std::uint64_t hi = std::max(ls, lt);
    bool ratio_bad = lo == 0 ? hi > 0
                             : static_cast<double>(hi) >
                                   config.max_len_ratio * static_cast<double>(lo);
    if (ratio_bad) {
      ++result.dropped_ratio;
      continue;
    }
    result.corpus.add_pair(pair);
  }
  return result;
}

Corpus merge(const std::vector<Corpus>& corpora) {
  if (corpora.empty()) throw InvalidConfig("merge: no corpora given");
  const Corpus& first = corpora.front();
  if (!first.is_parallel()) throw LanguageMismatch("merge: corpora must be parallel");
  Corpus out = Corpus::parallel(first.source_lang(), first.target_lang(),
                                "merge of " + std::to_string(corpora.size()) +
                                    " corpora");
  for (const Corpus& c : corpora) {
    if (!c.is_parallel()) throw LanguageMismatch("merge: corpora must be parallel");
    if (c.source_lang() != first.source_lang() ||
        c.target_lang() != first.target_lang()) {
      throw LanguageMismatch("merge: direction mismatch (" +
                             c.source_lang().rendered() + "->" +
                             c.target_lang().rendered() + " vs " +
                             first.source_lang().rendered() + "->" +
                             first.target_lang().rendered() + ")");
    }
    for (const SentencePair& pair : c.pairs()) out.add_pair(pair);
  }
  return out;
}

std::pair<Corpus, Corpus> split(const Corpus& corpus, double dev_fraction,
                                std::uint64_t seed) {
  if (!(dev_fraction >= 0.0 && dev_fraction < 1.0)) {
    throw InvalidConfig("split: dev_fraction must be in [0, 1)");
  }
  const auto& pairs = corpus.pairs();
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Hand-rolled Fisher-Yates on mt19937_64: identical sequence everywhere,
  // unlike std::shuffle whose draws are implementation-defined.
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  std::size_t n = pairs.size();
  auto dev_count = static_cast<std::size_t>(
      std::floor(static_cast<long double>(n) * dev_fraction + 1e-9L));
  Corpus train = Corpus::parallel(corpus.source_lang(), corpus.target_lang(),
                                  corpus.provenance() + " [train]");
  Corpus dev = Corpus::parallel(corpus.source_lang(), corpus.target_lang(),
                                corpus.provenance() + " [dev]");
  for (std::size_t i = 0; i < n - dev_count; ++i) train.add_pair(pairs[order[i]]);
  for (std::size_t i = n - dev_count; i < n; ++i) dev.add_pair(pairs[order[i]]);
  return {std::move(train), std::move(dev)};
}

// --- statistics -----------------------------------------------------------

SourceBreakdown stats(const std::vector<Corpus>& corpora) {
  SourceBreakdown breakdown;
  for (const Corpus& c : corpora) {
    if (!c.is_parallel()) {
      breakdown.mono_lines[c.mono_lang().rendered()] += c.size();
      continue;
    }
    // Table rows are keyed by the non-English side of the pair.
    std::string lang = c.target_lang().code() != "eng"
                           ? c.target_lang().rendered()
                           : c.source_lang().rendered();
    for (const SentencePair& pair : c.pairs()) {
      ++breakdown.counts[{lang, pair.origin}];
      ++breakdown.totals[lang];
    }
  }
  return breakdown;
}

// --- canonical JSONL ------------------------------------------------------

std::string pair_to_jsonl(const SentencePair& pair,
                          const LanguageTag& source_lang,
                          const LanguageTag& target_lang) {
  std::string out = "{\"src\": ";
  out += nlohmann::json(pair.source_text).dump();
  out += ", \"tgt\": ";
  out += nlohmann::json(pair.target_text).dump();
  out += ", \"src_lang\": \"";
  out += source_lang.rendered();
  out += "\", \"tgt_lang\": \"";
  out += target_lang.rendered();
  out += "\", \"origin\": \"";
  out += to_string(pair.origin);
  out += "\", \"synthetic_side\": \"";
  out += to_string(pair.synthetic_side);
  out += "\"}";
  return out;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const SentencePair& pair : corpus.pairs()) {
    out << pair_to_jsonl(pair, corpus.source_lang(), corpus.target_lang())
        << '\n';
  }
}

void write_jsonl_file(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_jsonl(corpus, out);
}

Corpus read_jsonl_file(const std::filesystem::path& path) {
  std::vector<std::string> lines = read_utf8_lines(path);
  std::optional<Corpus> corpus;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    nlohmann::json j = nlohmann::json::parse(lines[i], nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw IoError(path.string() + ": malformed JSON on line " +
                    std::to_string(i + 1));
    }
    try {
      LanguageTag src_lang = LanguageTag::parse(j.at("src_lang").get<std::string>());
      LanguageTag tgt_lang = LanguageTag::parse(j.at("tgt_lang").get<std::string>());
      if (!corpus) {
        corpus = Corpus::parallel(src_lang, tgt_lang, path.string());
      } else if (src_lang != corpus->source_lang() ||
                 tgt_lang != corpus->target_lang()) {
        throw LanguageMismatch(path.string() + ": direction changes on line " +
                               std::to_string(i + 1));
      }
      corpus->add_pair({j.at("src").get<std::string>(),
                        j.at("tgt").get<std::string>(),
                        origin_from_string(j.at("origin").get<std::string>()),
                        synthetic_side_from_string(
                            j.at("synthetic_side").get<std::string>())});
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path.string() + ": line " + std::to_string(i + 1) + ": " +
                    e.what());
    }
  }
  if (!corpus) {
    throw IoError(path.string() + ": empty corpus file has no direction");
  }
  return *std::move(corpus);
}

std::uint64_t scalar_length(std::string_view text) {
  // valid UTF-8 assumed: scalar values = bytes that are not continuations
  std::uint64_t count = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++count;
  }
  return count;
}

}  // namespace lrmt
