// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Declarations for the generated Unicode property tables
// (see scripts/gen_unicode_tables.py).

#pragma once

#include <cstddef>
#include <cstdint>

namespace lrmt::unidata {

// Alphabetical order; indexes must match the generator.
enum Category : std::uint8_t {
  Cc, Cf, Cn, Co, Cs,
  Ll, Lm, Lo, Lt, Lu,
  Mc, Me, Mn,
  Nd, Nl, No,
  Pc, Pd, Pe, Pf, Pi, Po, Ps,
  Sc, Sk, Sm, So,
  Zl, Zp, Zs,
};

struct CategoryRange {
  char32_t first;
  char32_t last;
  std::uint8_t category;
};

struct CccRange {
  char32_t first;
  char32_t last;
  std::uint8_t ccc;
};

struct DecompEntry {
  char32_t cp;
  std::uint32_t offset;  // into kDecompPool
  std::uint16_t length;
};

struct CompositionPair {
  char32_t starter;
  char32_t combiner;
  char32_t composite;
};

struct FoldEntry {
  char32_t cp;
  char32_t folded;
};

extern const char kUnicodeVersion[];

extern const CategoryRange kCategoryRanges[];
extern const std::size_t kNumCategoryRanges;

extern const CccRange kCccRanges[];
extern const std::size_t kNumCccRanges;

extern const DecompEntry kDecompEntries[];
extern const std::size_t kNumDecompEntries;
extern const char32_t kDecompPool[];

extern const CompositionPair kCompositionPairs[];
extern const std::size_t kNumCompositionPairs;

extern const FoldEntry kFoldEntries[];
extern const std::size_t kNumFoldEntries;

}  // namespace lrmt::unidata
