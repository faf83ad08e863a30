// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/tokenize.hpp"

#include "lrmt/errors.hpp"
#include "lrmt/unicode.hpp"

namespace lrmt {

TokenSequence word_tokenize(std::string_view text, bool lowercase) {
  std::u32string cps = uni::decode_utf8_or_throw(text);
  TokenSequence tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  };
  for (char32_t cp : cps) {
    if (lowercase) cp = uni::fold_case(cp);
    if (uni::is_space_separator(cp)) {
      flush();
    } else if (uni::is_word_char(cp)) {
      uni::encode_utf8(cp, cur);
    } else {
      // isolate punctuation and symbols as single-code-point tokens
      flush();
      std::string tok;
      uni::encode_utf8(cp, tok);
      tokens.push_back(std::move(tok));
    }
  }
  flush();
  return tokens;
}

NGramMultiset word_ngrams(const TokenSequence& tokens, int n) {
  if (n < 1) throw InvalidOrder(n);
  NGramMultiset out;
  out.order = n;
  if (tokens.size() < static_cast<std::size_t>(n)) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back('\x1F');
      key += tokens[i + k];
    }
    ++out.counts[key];
  }
  return out;
}

NGramMultiset char_ngrams(std::string_view text, int n) {
  if (n < 1) throw InvalidOrder(n);
  NGramMultiset out;
  out.order = n;
  std::u32string cps = uni::decode_utf8_or_throw(text);
  std::u32string chars;
  chars.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!uni::is_space_separator(cp)) chars.push_back(cp);
  }
  if (chars.size() < static_cast<std::size_t>(n)) return out;
  for (std::size_t i = 0; i + n <= chars.size(); ++i) {
    std::string key;
    for (int k = 0; k < n; ++k) uni::encode_utf8(chars[i + k], key);
    ++out.counts[key];
  }
  return out;
}

std::uint64_t clipped_matches(const NGramMultiset& a, const NGramMultiset& b) {
  const auto& small = a.counts.size() <= b.counts.size() ? a : b;
  const auto& large = a.counts.size() <= b.counts.size() ? b : a;
  std::uint64_t matches = 0;
  for (const auto& [key, count] : small.counts) {
    auto it = large.counts.find(key);
    if (it != large.counts.end()) {
      matches += std::min(count, it->second);
    }
  }
  return matches;
}

}  // namespace lrmt
