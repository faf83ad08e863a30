// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"
#include "metrics_internal.hpp"

namespace lrmt {
namespace {

using detail::TokenIds;

// Exact search for a maximum one-to-one unigram matching with the fewest
// chunks. Depth-first over hypothesis positions, matching options ordered
// continuation-first so the initial descent is already a good alignment;
// branch-and-bound on the chunk count with a node budget for safety
// (realistic sentences stay far below it; the budget only matters for
// adversarial inputs with massive word repetition).
class ChunkMinimizer {
 public:
  ChunkMinimizer(const TokenIds& hyp, const TokenIds& ref, int vocab)
      : hyp_(hyp), ref_(ref) {
    hyp_count_.assign(vocab, 0);
    ref_count_.assign(vocab, 0);
    quota_.assign(vocab, 0);
    remaining_hyp_.assign(vocab, 0);
    for (int w : hyp_) ++hyp_count_[w];
    for (int w : ref_) ++ref_count_[w];
    for (int w = 0; w < vocab; ++w) {
      quota_[w] = std::min(hyp_count_[w], ref_count_[w]);
      total_matches_ += quota_[w];
    }
    remaining_hyp_ = hyp_count_;
    ref_positions_.resize(vocab);
    for (int j = 0; j < static_cast<int>(ref_.size()); ++j) {
      ref_positions_[ref_[j]].push_back(j);
    }
    used_.assign(ref_.size(), 0);
  }

  // Returns {matches, chunks}.
  std::pair<int, int> solve() {
    if (total_matches_ == 0) return {0, 0};
    best_chunks_ = total_matches_ + 1;
    dfs(0, 0, 0, -2, -2);
    return {total_matches_, best_chunks_};
  }

 private:
  void dfs(int i, int matched, int chunks, int last_h, int last_r) {
    if (chunks >= best_chunks_) return;
    if (++nodes_ > kNodeBudget && best_chunks_ <= total_matches_) return;
    if (i == static_cast<int>(hyp_.size())) {
      if (matched == total_matches_) best_chunks_ = std::min(best_chunks_, chunks);
      return;
    }
    int w = hyp_[i];
    --remaining_hyp_[w];
    int still_needed = quota_[w] - matched_of(w);
    if (quota_[w] > 0 && still_needed > 0) {
      // continuation of the current chunk first
      int cont = (last_h == i - 1 && last_r + 1 < static_cast<int>(ref_.size()) &&
                  ref_[last_r + 1] == w && !used_[last_r + 1])
                     ? last_r + 1
                     : -1;
      if (cont >= 0) try_match(i, cont, matched, chunks, last_h, last_r);
      for (int j : ref_positions_[w]) {
        if (j == cont || used_[j]) continue;
        try_match(i, j, matched, chunks, last_h, last_r);
      }
    }
    // skipping this occurrence must leave enough later occurrences
    if (still_needed <= remaining_hyp_[w]) {
      dfs(i + 1, matched, chunks, last_h, last_r);
    }
    ++remaining_hyp_[w];
  }

  void try_match(int i, int j, int matched, int chunks, int last_h, int last_r) {
    bool continues = (last_h == i - 1 && last_r == j - 1);
    used_[j] = 1;
    ++matched_per_word_[hyp_[i]];
    dfs(i + 1, matched + 1, chunks + (continues ? 0 : 1), i, j);
    --matched_per_word_[hyp_[i]];
    used_[j] = 0;
  }

  int matched_of(int w) {
    auto it = matched_per_word_.find(w);
    return it == matched_per_word_.end() ? 0 : it->second;
  }

  static constexpr long long kNodeBudget = 200000;

  const TokenIds& hyp_;
  const TokenIds& ref_;
  std::vector<int> hyp_count_, ref_count_, quota_, remaining_hyp_;
  std::vector<std::vector<int>> ref_positions_;
  std::vector<char> used_;
  std::unordered_map<int, int> matched_per_word_;
  int total_matches_ = 0;
  int best_chunks_ = 0;
  long long nodes_ = 0;
};

}  // namespace

SegmentScore meteor_corpus(std::span<const std::string> hypotheses,
                           std::span<const std::string> references) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatch(hypotheses.size(), references.size());
  }
  if (hypotheses.empty()) throw EmptyInput("meteor: no segments");

  std::uint64_t matches = 0, chunks = 0, hyp_tokens = 0, ref_tokens = 0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    detail::TokenInterner interner;
    TokenIds hyp = interner.intern(word_tokenize(hypotheses[s]));
    TokenIds ref = interner.intern(word_tokenize(references[s]));
    hyp_tokens += hyp.size();
    ref_tokens += ref.size();
    ChunkMinimizer minimizer(hyp, ref, static_cast<int>(interner.size()));
    auto [m, ch] = minimizer.solve();
    matches += static_cast<std::uint64_t>(m);
    chunks += static_cast<std::uint64_t>(ch);
  }

  SegmentScore score;
  score.aux["matches"] = static_cast<double>(matches);
  score.aux["chunks"] = static_cast<double>(chunks);
  score.aux["hyp_tokens"] = static_cast<double>(hyp_tokens);
  score.aux["ref_tokens"] = static_cast<double>(ref_tokens);
  if (matches == 0 || hyp_tokens == 0 || ref_tokens == 0) return score;

  double p = static_cast<double>(matches) / static_cast<double>(hyp_tokens);
  double r = static_cast<double>(matches) / static_cast<double>(ref_tokens);
  double f = 10.0 * p * r / (r + 9.0 * p);
  double frag = static_cast<double>(chunks) / static_cast<double>(matches);
  double penalty = 0.5 * frag * frag * frag;
  score.aux["precision"] = p;
  score.aux["recall"] = r;
  score.aux["fmean"] = f;
  score.aux["penalty"] = penalty;
  score.value = f * (1.0 - penalty);
  return score;
}

}  // namespace lrmt
