// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Expected values frozen from scripts/oracle_metrics.py (independent
// reference computed before this implementation existed).

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lrmt/errors.hpp"
#include "lrmt/metrics.hpp"

using namespace lrmt;

namespace {
using V = std::vector<std::string>;

void check_close(double got, double expected, double tol = 0.01) {
  CAPTURE(got);
  CAPTURE(expected);
  CHECK(std::fabs(got - expected) <= tol);
}
}  // namespace

TEST_CASE("bleu micro oracle cases") {
  check_close(bleu_corpus(V{"the cat sat"}, V{"the cat sat down"}).value,
              71.6531310574);
  check_close(bleu_corpus(V{"a b c d"}, V{"a b c d"}).value, 100.0);
  check_close(bleu_corpus(V{"the the the"}, V{"the cat"}).value, 0.0);
  check_close(bleu_corpus(V{"a b c d"}, V{"a b c d e f"}).value, 60.6530659713);
  check_close(bleu_corpus(V{"a b x d"}, V{"a b c d"}).value, 0.0);
  check_close(bleu_corpus(V{"a b x d"}, V{"a b c d"}, 4, BleuSmoothing::Floor)
                  .value,
              18.8030154654);
  check_close(bleu_corpus(V{"a b", "c d"}, V{"a b", "c x"}).value,
              61.2372435696);
  check_close(bleu_corpus(V{"the the the the"}, V{"the the cat"}, 4,
                          BleuSmoothing::Floor)
                  .value,
              16.9904424485);
  check_close(bleu_corpus(V{"a"}, V{"a b c"}).value, 13.5335283237);
  check_close(bleu_corpus(V{"a b c"}, V{"x y z"}).value, 0.0);
  check_close(bleu_corpus(V{"a b c"}, V{"a b c"}, 2).value, 100.0);
  check_close(bleu_corpus(V{"a b c", "d e"}, V{"a b c d", "d e f"}).value,
              67.0320046036);
}

TEST_CASE("bleu errors") {
  CHECK_THROWS_AS(bleu_corpus(V{"a"}, V{"a", "b"}), LengthMismatch);
  CHECK_THROWS_AS(bleu_corpus(V{}, V{}), EmptyInput);
}

TEST_CASE("bleu aux statistics") {
  SegmentScore s = bleu_corpus(V{"the cat sat"}, V{"the cat sat down"});
  CHECK(s.aux.at("p1") == doctest::Approx(1.0));
  CHECK(s.aux.at("p2") == doctest::Approx(1.0));
  CHECK(s.aux.at("p3") == doctest::Approx(1.0));
  CHECK(s.aux.at("hyp_tokens") == doctest::Approx(3.0));
  CHECK(s.aux.at("ref_tokens") == doctest::Approx(4.0));
  CHECK(s.aux.count("p4") == 0);  // no 4-grams in a 3-token hypothesis
}

TEST_CASE("bleu range and identity on random corpora") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> segs(1, 6), len(1, 10), sym(0, 3);
  for (int iter = 0; iter < 100; ++iter) {
    V hyp, ref;
    int n = segs(rng);
    for (int s = 0; s < n; ++s) {
      std::string h, r;
      int hl = len(rng), rl = len(rng);
      for (int i = 0; i < hl; ++i) h += std::string(i ? " " : "") + "abcd"[sym(rng)];
      for (int i = 0; i < rl; ++i) r += std::string(i ? " " : "") + "abcd"[sym(rng)];
      hyp.push_back(h);
      ref.push_back(r);
    }
    double v = bleu_corpus(hyp, ref, 4, BleuSmoothing::Floor).value;
    CHECK(v >= 0.0);
    CHECK(v <= 100.0 + 1e-9);
    CHECK(bleu_corpus(hyp, hyp).value == doctest::Approx(100.0));
  }
}

TEST_CASE("bleu clipping is monotone when a matched token is removed") {
  // removing one matched token never increases any clipped match count
  V hyp{"the cat sat on the mat"};
  V hyp_less{"the cat sat on the"};
  V ref{"the cat sat on the mat"};
  SegmentScore full = bleu_corpus(hyp, ref);
  SegmentScore less = bleu_corpus(hyp_less, ref, 4, BleuSmoothing::Floor);
  for (int n = 1; n <= 4; ++n) {
    std::string key = "p" + std::to_string(n);
    // precision p_n = matches/total; compare raw matches via p*total
    double full_matches =
        full.aux.at(key) * (full.aux.at("hyp_tokens") - n + 1);
    double less_matches =
        less.aux.at(key) * (less.aux.at("hyp_tokens") - n + 1);
    CHECK(less_matches <= full_matches + 1e-9);
  }
}
