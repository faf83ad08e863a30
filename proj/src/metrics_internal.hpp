// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the metric implementations.

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lrmt/tokenize.hpp"

namespace lrmt::detail {

using TokenIds = std::vector<int>;

class TokenInterner {
 public:
  TokenIds intern(const TokenSequence& tokens) {
    TokenIds ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) {
      auto [it, inserted] = map_.try_emplace(t, static_cast<int>(map_.size()));
      ids.push_back(it->second);
    }
    return ids;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, int> map_;
};

// Word-level Levenshtein distance, uniform insert/delete/substitute cost.
int levenshtein(const TokenIds& a, const TokenIds& b);

}  // namespace lrmt::detail
