// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// The five-metric evaluation battery: BLEU, TER, RIBES, METEOR (exact
// unigram stage), chrF. Corpus scores pool sufficient statistics over
// segments; every function is pure and deterministic.

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "lrmt/language.hpp"

namespace lrmt {

// A score plus named intermediate statistics (matches, chunks, edits, ...).
struct SegmentScore {
  double value = 0.0;
  std::map<std::string, double> aux;
};

enum class BleuSmoothing { None, Floor };

// Corpus-level BLEU on a 0-100 scale: brevity penalty times the geometric
// mean of clipped n-gram precisions. Orders with no hypothesis n-grams are
// excluded from the mean; with Smoothing::None any zero precision zeroes
// the score, with Floor a zero match count is replaced by epsilon.
SegmentScore bleu_corpus(std::span<const std::string> hypotheses,
                         std::span<const std::string> references,
                         int max_order = 4,
                         BleuSmoothing smoothing = BleuSmoothing::None,
                         double floor_epsilon = 0.1);

// Translation error rate, percent of reference length: unit-cost phrase
// shifts (greedy search, phrase length <= 10) plus word-level Levenshtein
// edits after shifting.
SegmentScore ter(std::string_view hypothesis, std::string_view reference);
SegmentScore ter_corpus(std::span<const std::string> hypotheses,
                        std::span<const std::string> references);

// RIBES in [0,1]: normalized Kendall's tau of the one-to-one word
// alignment, damped by unigram precision^alpha and brevity^beta.
SegmentScore ribes(std::string_view hypothesis, std::string_view reference,
                   double alpha = 0.25, double beta = 0.10);
// Arithmetic mean of segment RIBES.
SegmentScore ribes_corpus(std::span<const std::string> hypotheses,
                          std::span<const std::string> references,
                          double alpha = 0.25, double beta = 0.10);

// METEOR (exact-match stage) in [0,1]: recall-weighted harmonic mean of
// pooled unigram precision/recall times a fragmentation penalty. The
// alignment is a maximum one-to-one exact matching minimizing chunks.
SegmentScore meteor_corpus(std::span<const std::string> hypotheses,
                           std::span<const std::string> references);

// chrF in [0,100]: character n-gram F-score with arithmetic-mean pooled
// precisions/recalls over orders 1..max_order and recall weight beta.
SegmentScore chrf_corpus(std::span<const std::string> hypotheses,
                         std::span<const std::string> references,
                         int max_order = 6, double beta = 2.0);

// The five-metric report for one translation direction.
struct MetricReport {
  double bleu = 0.0;    // [0,100]
  double ter = 0.0;     // >= 0, percent
  double ribes = 0.0;   // [0,1]
  double meteor = 0.0;  // [0,1]
  double chrf = 0.0;    // [0,100]
  LanguageTag source_lang;
  LanguageTag target_lang;
  std::size_t n_segments = 0;
  std::map<std::string, double> aux;  // merged per-metric statistics
};

// Runs all five metrics with default parameters. With `lowercase` the
// lines are case folded before scoring.
MetricReport evaluate_all(std::span<const std::string> hypotheses,
                          std::span<const std::string> references,
                          const LanguageTag& source_lang,
                          const LanguageTag& target_lang,
                          bool lowercase = false);

}  // namespace lrmt
