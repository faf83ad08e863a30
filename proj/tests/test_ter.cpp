// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Expected values frozen from scripts/oracle_metrics.py; the exhaustive
// shift-search oracle lives in oracle_search.hpp.

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"
#include "lrmt/tokenize.hpp"
#include "oracle_search.hpp"

using namespace lrmt;

namespace {
using V = std::vector<std::string>;

void check_close(double got, double expected, double tol = 0.01) {
  CAPTURE(got);
  CAPTURE(expected);
  CHECK(std::fabs(got - expected) <= tol);
}
}  // namespace

TEST_CASE("ter micro oracle cases") {
  check_close(ter("a b c d", "a b c d").value, 0.0);
  check_close(ter("a b c e", "a b c d").value, 25.0);
  check_close(ter("b a c d", "a b c d").value, 25.0);
  check_close(ter("a b c", "a b c d").value, 25.0);
  check_close(ter("a b c d e", "a b c d").value, 25.0);
  check_close(ter("", "a b").value, 100.0);
  check_close(ter("c d a b", "a b c d").value, 25.0);
  check_close(ter("b a d c", "a b c d").value, 50.0);
  check_close(ter("a x b", "a b x").value, 33.3333333333);
  check_close(ter("x y z", "a b c").value, 100.0);
  check_close(ter("the cat the", "the the cat").value, 33.3333333333);
  check_close(ter("c d a b e", "a b c d").value, 50.0);
}

TEST_CASE("ter shift accounting") {
  SegmentScore s = ter("b a c d", "a b c d");
  CHECK(s.aux.at("shifts") == doctest::Approx(1.0));
  CHECK(s.aux.at("edits") == doctest::Approx(0.0));
  s = ter("a b c e", "a b c d");
  CHECK(s.aux.at("shifts") == doctest::Approx(0.0));
  CHECK(s.aux.at("edits") == doctest::Approx(1.0));
}

TEST_CASE("ter corpus pooling") {
  check_close(ter_corpus(V{"a b c d", "a b c d"}, V{"a b c d", "a b c d"}).value,
              0.0);
  check_close(ter_corpus(V{"a b c e", "e b c d"}, V{"a b c d", "a b c d"}).value,
              25.0);
  check_close(ter_corpus(V{"a b c d", "a b c e"}, V{"a b c d", "a b c d"}).value,
              12.5);
}

TEST_CASE("ter errors") {
  CHECK_THROWS_AS(ter("a", ""), EmptyReference);
  CHECK_THROWS_AS(ter("a", "   "), EmptyReference);
  CHECK_THROWS_AS(ter_corpus(V{"a"}, V{"a", "b"}), LengthMismatch);
  CHECK_THROWS_AS(ter_corpus(V{}, V{}), EmptyInput);
}

TEST_CASE("ter never exceeds plain levenshtein") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> len(1, 8), sym(0, 3);
  for (int iter = 0; iter < 300; ++iter) {
    testing::Tokens hyp, ref;
    int hl = len(rng), rl = len(rng);
    for (int i = 0; i < hl; ++i) hyp.push_back(std::string(1, "abcd"[sym(rng)]));
    for (int i = 0; i < rl; ++i) ref.push_back(std::string(1, "abcd"[sym(rng)]));
    std::string h, r;
    for (const auto& t : hyp) h += (h.empty() ? "" : " ") + t;
    for (const auto& t : ref) r += (r.empty() ? "" : " ") + t;
    double got = ter(h, r).value;
    double lev_bound = 100.0 * testing::lev_full_matrix(hyp, ref) / ref.size();
    CHECK(got <= lev_bound + 1e-9);
    CHECK(got >= 0.0);
  }
}

TEST_CASE("greedy ter vs exhaustive optimum on small pairs") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> len(1, 6), sym(0, 3);
  int n_pairs = 200;
  double total_gap = 0.0;
  for (int iter = 0; iter < n_pairs; ++iter) {
    testing::Tokens hyp, ref;
    int hl = len(rng), rl = len(rng);
    for (int i = 0; i < hl; ++i) hyp.push_back(std::string(1, "abcd"[sym(rng)]));
    for (int i = 0; i < rl; ++i) ref.push_back(std::string(1, "abcd"[sym(rng)]));
    std::string h, r;
    for (const auto& t : hyp) h += (h.empty() ? "" : " ") + t;
    for (const auto& t : ref) r += (r.empty() ? "" : " ") + t;
    SegmentScore s = ter(h, r);
    int greedy = static_cast<int>(s.aux.at("shifts") + s.aux.at("edits"));
    int optimal = testing::ter_optimal_numerator(hyp, ref);
    CHECK(greedy >= optimal);
    total_gap += greedy - optimal;
  }
  double mean_gap = total_gap / n_pairs;
  CAPTURE(mean_gap);
  CHECK(mean_gap <= 0.05);
}
