// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic tokenization and n-gram extraction shared by all metrics.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lrmt {

using TokenSequence = std::vector<std::string>;

// Multiset of n-grams. Word n-grams join their tokens with U+001F (which
// cleaned text can never contain); character n-grams key on the UTF-8 of
// the code point window.
struct NGramMultiset {
  int order = 1;
  std::unordered_map<std::string, std::uint32_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
  }
};

// Splits into tokens: every code point that is not a letter, decimal digit
// or combining mark is isolated, then the line is split on whitespace.
// With `lowercase`, code points are case folded first.
TokenSequence word_tokenize(std::string_view text, bool lowercase = false);

// Contiguous n-token windows. Throws InvalidOrder when n < 1.
NGramMultiset word_ngrams(const TokenSequence& tokens, int n);

// Contiguous n-code-point windows after removing all whitespace.
// Throws InvalidOrder when n < 1.
NGramMultiset char_ngrams(std::string_view text, int n);

// Number of clipped matches: sum over keys of min(count in a, count in b).
std::uint64_t clipped_matches(const NGramMultiset& a, const NGramMultiset& b);

}  // namespace lrmt
