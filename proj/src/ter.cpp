// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"
#include "metrics_internal.hpp"

namespace lrmt {
namespace detail {

int levenshtein(const TokenIds& a, const TokenIds& b) {
  const std::size_t n = b.size();
  std::vector<int> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[0] = static_cast<int>(i) + 1;
    for (std::size_t j = 0; j < n; ++j) {
      int sub = prev[j] + (a[i] != b[j] ? 1 : 0);
      cur[j + 1] = std::min({prev[j + 1] + 1, cur[j] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace detail

namespace {

constexpr int kMaxPhraseLen = 10;

struct SpanHash {
  std::size_t operator()(const detail::TokenIds& v) const {
    std::size_t h = 14695981039346656037ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9E3779B97F4A7C15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using SpanSet = std::unordered_set<detail::TokenIds, SpanHash>;

SpanSet reference_spans(const detail::TokenIds& ref) {
  SpanSet spans;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::size_t max_len = std::min<std::size_t>(kMaxPhraseLen, ref.size() - i);
    for (std::size_t len = 1; len <= max_len; ++len) {
      spans.insert(detail::TokenIds(ref.begin() + i, ref.begin() + i + len));
    }
  }
  return spans;
}

struct TerResult {
  int shifts = 0;
  int edits = 0;
  int numerator() const { return shifts + edits; }
};

// Greedy shift search: repeatedly apply the phrase shift with the largest
// Levenshtein reduction (ties: leftmost origin, longest phrase, leftmost
// destination), one unit of cost per shift, until no shift helps.
TerResult ter_numerator(detail::TokenIds hyp, const detail::TokenIds& ref) {
  TerResult result;
  int dist = detail::levenshtein(hyp, ref);
  if (hyp.size() < 2) {
    result.edits = dist;
    return result;
  }
  const SpanSet spans = reference_spans(ref);

  while (dist > 0) {
    int best_reduction = 0;
    std::size_t best_origin = 0, best_len = 0, best_dest = 0;
    detail::TokenIds best_seq;

    const std::size_t n = hyp.size();
    detail::TokenIds rest, cand;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t max_len = std::min<std::size_t>(kMaxPhraseLen, n - i);
      for (std::size_t len = 1; len <= max_len; ++len) {
        detail::TokenIds span(hyp.begin() + i, hyp.begin() + i + len);
        // every prefix of a reference span is itself a reference span
        if (!spans.count(span)) break;
        rest.clear();
        rest.insert(rest.end(), hyp.begin(), hyp.begin() + i);
        rest.insert(rest.end(), hyp.begin() + i + len, hyp.end());
        for (std::size_t dest = 0; dest <= rest.size(); ++dest) {
          if (dest == i) continue;
          cand.clear();
          cand.insert(cand.end(), rest.begin(), rest.begin() + dest);
          cand.insert(cand.end(), span.begin(), span.end());
          cand.insert(cand.end(), rest.begin() + dest, rest.end());
          int reduction = dist - detail::levenshtein(cand, ref);
          bool better = reduction > best_reduction;
          if (!better && reduction == best_reduction && reduction > 0) {
            better = i < best_origin ||
                     (i == best_origin &&
                      (len > best_len || (len == best_len && dest < best_dest)));
          }
          if (better) {
            best_reduction = reduction;
            best_origin = i;
            best_len = len;
            best_dest = dest;
            best_seq = cand;
          }
        }
      }
    }
    if (best_reduction <= 0) break;
    hyp = std::move(best_seq);
    dist -= best_reduction;
    ++result.shifts;
  }
  result.edits = dist;
  return result;
}

struct SegmentTer {
  TerResult result;
  std::size_t ref_len = 0;
};

SegmentTer score_segment(std::string_view hypothesis, std::string_view reference) {
  detail::TokenInterner interner;
  detail::TokenIds hyp = interner.intern(word_tokenize(hypothesis));
  detail::TokenIds ref = interner.intern(word_tokenize(reference));
  if (ref.empty()) throw EmptyReference();
  return {ter_numerator(std::move(hyp), ref), ref.size()};
}

}  // namespace

SegmentScore ter(std::string_view hypothesis, std::string_view reference) {
  SegmentTer seg = score_segment(hypothesis, reference);
  SegmentScore score;
  score.value = 100.0 * seg.result.numerator() / static_cast<double>(seg.ref_len);
  score.aux["shifts"] = seg.result.shifts;
  score.aux["edits"] = seg.result.edits;
  score.aux["ref_tokens"] = static_cast<double>(seg.ref_len);
  return score;
}

SegmentScore ter_corpus(std::span<const std::string> hypotheses,
                        std::span<const std::string> references) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("ter: no segments");
  std::uint64_t numerator = 0;
  std::uint64_t ref_tokens = 0;
  std::uint64_t shifts = 0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    SegmentTer seg = score_segment(hypotheses[s], references[s]);
    numerator += static_cast<std::uint64_t>(seg.result.numerator());
    shifts += static_cast<std::uint64_t>(seg.result.shifts);
    ref_tokens += seg.ref_len;
  }
  SegmentScore score;
  score.value = 100.0 * static_cast<double>(numerator) /
                static_cast<double>(ref_tokens);
  score.aux["numerator"] = static_cast<double>(numerator);
  score.aux["shifts"] = static_cast<double>(shifts);
  score.aux["ref_tokens"] = static_cast<double>(ref_tokens);
  return score;
}

}  // namespace lrmt
