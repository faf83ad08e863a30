// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdint>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"

namespace lrmt {

SegmentScore bleu_corpus(std::span<const std::string> hypotheses,
                         std::span<const std::string> references,
                         int max_order, BleuSmoothing smoothing,
                         double floor_epsilon) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("bleu: no segments");
  if (max_order < 1) throw InvalidOrder(max_order);

  std::vector<std::uint64_t> matches(max_order + 1, 0);
  std::vector<std::uint64_t> totals(max_order + 1, 0);
  std::uint64_t hyp_tokens = 0;
  std::uint64_t ref_tokens = 0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    TokenSequence hyp = word_tokenize(hypotheses[s]);
    TokenSequence ref = word_tokenize(references[s]);
    hyp_tokens += hyp.size();
    ref_tokens += ref.size();
    for (int n = 1; n <= max_order; ++n) {
      NGramMultiset hn = word_ngrams(hyp, n);
      NGramMultiset rn = word_ngrams(ref, n);
      matches[n] += clipped_matches(hn, rn);
      totals[n] += hn.total();
    }
  }

  SegmentScore score;
  score.aux["hyp_tokens"] = static_cast<double>(hyp_tokens);
  score.aux["ref_tokens"] = static_cast<double>(ref_tokens);

  double log_sum = 0.0;
  int included = 0;
  bool zero_precision = false;
  for (int n = 1; n <= max_order; ++n) {
    if (totals[n] == 0) continue;  // order longer than every hypothesis
    double p = static_cast<double>(matches[n]) / static_cast<double>(totals[n]);
    score.aux["p" + std::to_string(n)] = p;
    if (p == 0.0) {
      if (smoothing == BleuSmoothing::None) {
        zero_precision = true;
        break;
      }
      p = floor_epsilon / static_cast<double>(totals[n]);
    }
    log_sum += std::log(p);
    ++included;
  }

  if (zero_precision || included == 0 || hyp_tokens == 0) {
    score.value = 0.0;
    score.aux["brevity_penalty"] = 0.0;
    return score;
  }
  double bp = hyp_tokens > ref_tokens
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref_tokens) /
                                       static_cast<double>(hyp_tokens));
  score.aux["brevity_penalty"] = bp;
  score.value = 100.0 * bp * std::exp(log_sum / included);
  return score;
}

}  // namespace lrmt
