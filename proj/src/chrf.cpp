// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"

namespace lrmt {

SegmentScore chrf_corpus(std::span<const std::string> hypotheses,
                         std::span<const std::string> references,
                         int max_order, double beta) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("chrf: no segments");
  if (max_order < 1) throw InvalidOrder(max_order);

  double precision_sum = 0.0;
  double recall_sum = 0.0;
  int included = 0;
  for (int n = 1; n <= max_order; ++n) {
    std::uint64_t matches = 0, hyp_total = 0, ref_total = 0;
    for (std::size_t s = 0; s < hypotheses.size(); ++s) {
      NGramMultiset hn = char_ngrams(hypotheses[s], n);
      NGramMultiset rn = char_ngrams(references[s], n);
      matches += clipped_matches(hn, rn);
      hyp_total += hn.total();
      ref_total += rn.total();
    }
    if (hyp_total == 0 && ref_total == 0) continue;  // order too long for all
    precision_sum += hyp_total ? static_cast<double>(matches) / hyp_total : 0.0;
    recall_sum += ref_total ? static_cast<double>(matches) / ref_total : 0.0;
    ++included;
  }

  SegmentScore score;
  score.aux["orders_included"] = included;
  if (included == 0) return score;
  double p = precision_sum / included;
  double r = recall_sum / included;
  score.aux["mean_precision"] = p;
  score.aux["mean_recall"] = r;
  double denom = beta * beta * p + r;
  if (denom == 0.0) return score;
  score.value = 100.0 * (1.0 + beta * beta) * p * r / denom;
  return score;
}

}  // namespace lrmt
