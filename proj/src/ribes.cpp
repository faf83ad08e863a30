// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"
#include "metrics_internal.hpp"

namespace lrmt {
namespace {

using detail::TokenIds;

struct Occurrences {
  std::unordered_map<int, std::vector<int>> unigram;
  std::unordered_map<long long, std::vector<int>> bigram;  // key: a*M+b

  explicit Occurrences(const TokenIds& ids, long long vocab) {
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
      unigram[ids[i]].push_back(i);
    }
    for (int i = 0; i + 1 < static_cast<int>(ids.size()); ++i) {
      bigram[ids[i] * vocab + ids[i + 1]].push_back(i);
    }
  }

  const std::vector<int>* find_uni(int w) const {
    auto it = unigram.find(w);
    return it == unigram.end() ? nullptr : &it->second;
  }
  const std::vector<int>* find_bi(long long key) const {
    auto it = bigram.find(key);
    return it == bigram.end() ? nullptr : &it->second;
  }
};

// One-to-one alignment of hypothesis words to reference positions:
// a word occurring exactly once on both sides aligns directly; otherwise
// a left or right neighbor bigram occurring exactly once on both sides
// aligns via that context. A reference position is consumed at most once.
std::vector<int> align(const TokenIds& hyp, const TokenIds& ref, long long vocab) {
  Occurrences h(hyp, vocab), r(ref, vocab);
  std::vector<char> used(ref.size(), 0);
  std::vector<int> aligned;
  const int n = static_cast<int>(hyp.size());
  for (int i = 0; i < n; ++i) {
    const std::vector<int>* ru = r.find_uni(hyp[i]);
    if (ru == nullptr) continue;
    const std::vector<int>* hu = h.find_uni(hyp[i]);
    int pos = -1;
    if (ru->size() == 1 && hu->size() == 1) {
      pos = ru->front();
    } else {
      if (i > 0) {
        long long key = hyp[i - 1] * vocab + hyp[i];
        const std::vector<int>* rb = r.find_bi(key);
        const std::vector<int>* hb = h.find_bi(key);
        if (rb && hb && rb->size() == 1 && hb->size() == 1) {
          pos = rb->front() + 1;
        }
      }
      if (pos < 0 && i + 1 < n) {
        long long key = hyp[i] * vocab + hyp[i + 1];
        const std::vector<int>* rb = r.find_bi(key);
        const std::vector<int>* hb = h.find_bi(key);
        if (rb && hb && rb->size() == 1 && hb->size() == 1) {
          pos = rb->front();
        }
      }
    }
    if (pos >= 0 && !used[pos]) {
      used[pos] = 1;
      aligned.push_back(pos);
    }
  }
  return aligned;
}

}  // namespace

SegmentScore ribes(std::string_view hypothesis, std::string_view reference,
                   double alpha, double beta) {
  detail::TokenInterner interner;
  TokenIds hyp = interner.intern(word_tokenize(hypothesis));
  TokenIds ref = interner.intern(word_tokenize(reference));
  SegmentScore score;
  if (hyp.empty() || ref.empty()) return score;

  long long vocab = static_cast<long long>(interner.size()) + 1;
  std::vector<int> aligned = align(hyp, ref, vocab);
  score.aux["aligned"] = static_cast<double>(aligned.size());
  if (aligned.size() < 2) return score;

  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < aligned.size(); ++i) {
    for (std::size_t j = i + 1; j < aligned.size(); ++j) {
      if (aligned[i] < aligned[j]) ++concordant;
      else if (aligned[i] > aligned[j]) ++discordant;
    }
  }
  long long pairs = static_cast<long long>(aligned.size()) *
                    (static_cast<long long>(aligned.size()) - 1) / 2;
  double tau = static_cast<double>(concordant - discordant) /
               static_cast<double>(pairs);
  double nkt = (tau + 1.0) / 2.0;
  double precision = static_cast<double>(aligned.size()) /
                     static_cast<double>(hyp.size());
  double bp = std::min(1.0, std::exp(1.0 - static_cast<double>(ref.size()) /
                                               static_cast<double>(hyp.size())));
  score.aux["nkt"] = nkt;
  score.aux["precision"] = precision;
  score.aux["brevity_penalty"] = bp;
  score.value = nkt * std::pow(precision, alpha) * std::pow(bp, beta);
  return score;
}

SegmentScore ribes_corpus(std::span<const std::string> hypotheses,
                          std::span<const std::string> references,
                          double alpha, double beta) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("ribes: no segments");
  double sum = 0.0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    sum += ribes(hypotheses[s], references[s], alpha, beta).value;
  }
  SegmentScore score;
  score.value = sum / static_cast<double>(hypotheses.size());
  return score;
}

}  // namespace lrmt
