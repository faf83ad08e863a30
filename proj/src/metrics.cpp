// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/metrics.hpp"

#include <vector>

#include "lrmt/errors.hpp"
#include "lrmt/unicode.hpp"

namespace lrmt {
namespace {

std::vector<std::string> fold_lines(std::span<const std::string> lines) {
  std::vector<std::string> folded;
  folded.reserve(lines.size());
  for (const auto& line : lines) {
    std::u32string cps = uni::decode_utf8_or_throw(line);
    for (char32_t& cp : cps) cp = uni::fold_case(cp);
    folded.push_back(uni::encode_utf8(cps));
  }
  return folded;
}

void merge_aux(MetricReport& report, const char* prefix, const SegmentScore& s) {
  for (const auto& [key, value] : s.aux) {
    report.aux[std::string(prefix) + "." + key] = value;
  }
}

}  // namespace

MetricReport evaluate_all(std::span<const std::string> hypotheses,
                          std::span<const std::string> references,
                          const LanguageTag& source_lang,
                          const LanguageTag& target_lang, bool lowercase) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("evaluate: no segments");

  std::vector<std::string> hyp_folded, ref_folded;
  if (lowercase) {
    hyp_folded = fold_lines(hypotheses);
    ref_folded = fold_lines(references);
    hypotheses = hyp_folded;
    references = ref_folded;
  }

  MetricReport report;
  report.source_lang = source_lang;
  report.target_lang = target_lang;
  report.n_segments = hypotheses.size();

  SegmentScore bleu = bleu_corpus(hypotheses, references);
  SegmentScore ter = ter_corpus(hypotheses, references);
  SegmentScore ribes = ribes_corpus(hypotheses, references);
  SegmentScore meteor = meteor_corpus(hypotheses, references);
  SegmentScore chrf = chrf_corpus(hypotheses, references);

  report.bleu = bleu.value;
  report.ter = ter.value;
  report.ribes = ribes.value;
  report.meteor = meteor.value;
  report.chrf = chrf.value;
  merge_aux(report, "bleu", bleu);
  merge_aux(report, "ter", ter);
  merge_aux(report, "ribes", ribes);
  merge_aux(report, "meteor", meteor);
  merge_aux(report, "chrf", chrf);
  return report;
}

}  // namespace lrmt
