// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/unicode.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "unicode_data.hpp"

namespace lrmt::uni {
namespace {

using namespace lrmt::unidata;

// Hangul syllable composition constants (UAX #15).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr char32_t kLCount = 19;
constexpr char32_t kVCount = 21;
constexpr char32_t kTCount = 28;
constexpr char32_t kNCount = kVCount * kTCount;
constexpr char32_t kSCount = kLCount * kNCount;

constexpr std::uint8_t kFlagDecomp = 1;    // has an NFKD mapping
constexpr std::uint8_t kFlagCombiner = 2;  // second element of a composition pair
constexpr std::uint8_t kFlagCcc = 4;       // nonzero combining class

// Direct-index tables for the BMP; everything above falls back to binary
// search over the generated ranges. Built once, ~400 KB.
struct Bmp {
  std::array<std::uint8_t, 0x10000> category;
  std::array<std::uint8_t, 0x10000> ccc;
  std::array<std::uint8_t, 0x10000> flags;
  std::array<char32_t, 0x10000> fold;

  Bmp() {
    category.fill(Category::Cn);
    ccc.fill(0);
    flags.fill(0);
    for (char32_t cp = 0; cp < 0x10000; ++cp) fold[cp] = cp;
    for (std::size_t i = 0; i < kNumCategoryRanges; ++i) {
      const auto& r = kCategoryRanges[i];
      if (r.first > 0xFFFF) break;
      char32_t hi = std::min<char32_t>(r.last, 0xFFFF);
      for (char32_t cp = r.first; cp <= hi; ++cp) category[cp] = r.category;
    }
    for (std::size_t i = 0; i < kNumCccRanges; ++i) {
      const auto& r = kCccRanges[i];
      if (r.first > 0xFFFF) break;
      char32_t hi = std::min<char32_t>(r.last, 0xFFFF);
      for (char32_t cp = r.first; cp <= hi; ++cp) {
        ccc[cp] = r.ccc;
        flags[cp] |= kFlagCcc;
      }
    }
    for (std::size_t i = 0; i < kNumDecompEntries; ++i) {
      char32_t cp = kDecompEntries[i].cp;
      if (cp <= 0xFFFF) flags[cp] |= kFlagDecomp;
    }
    for (std::size_t i = 0; i < kNumCompositionPairs; ++i) {
      char32_t cp = kCompositionPairs[i].combiner;
      if (cp <= 0xFFFF) flags[cp] |= kFlagCombiner;
    }
    // Hangul jamo that can extend a preceding L or LV sequence.
    for (char32_t v = kVBase; v < kVBase + kVCount; ++v) flags[v] |= kFlagCombiner;
    for (char32_t t = kTBase + 1; t < kTBase + kTCount; ++t) flags[t] |= kFlagCombiner;
    for (std::size_t i = 0; i < kNumFoldEntries; ++i) {
      const auto& e = kFoldEntries[i];
      if (e.cp <= 0xFFFF) fold[e.cp] = e.folded;
    }
  }
};

const Bmp& bmp() {
  static const Bmp tables;
  return tables;
}

std::uint8_t category_slow(char32_t cp) {
  const CategoryRange* begin = kCategoryRanges;
  const CategoryRange* end = kCategoryRanges + kNumCategoryRanges;
  auto it = std::upper_bound(begin, end, cp, [](char32_t v, const CategoryRange& r) {
    return v < r.first;
  });
  if (it == begin) return Category::Cn;
  --it;
  return cp <= it->last ? it->category : static_cast<std::uint8_t>(Category::Cn);
}

std::uint8_t ccc_slow(char32_t cp) {
  const CccRange* begin = kCccRanges;
  const CccRange* end = kCccRanges + kNumCccRanges;
  auto it = std::upper_bound(begin, end, cp, [](char32_t v, const CccRange& r) {
    return v < r.first;
  });
  if (it == begin) return 0;
  --it;
  return cp <= it->last ? it->ccc : std::uint8_t{0};
}

std::uint8_t general_category(char32_t cp) {
  if (cp <= 0xFFFF) return bmp().category[cp];
  return category_slow(cp);
}

const DecompEntry* find_decomp(char32_t cp) {
  if (cp <= 0xFFFF && !(bmp().flags[cp] & kFlagDecomp)) return nullptr;
  const DecompEntry* begin = kDecompEntries;
  const DecompEntry* end = kDecompEntries + kNumDecompEntries;
  auto it = std::lower_bound(begin, end, cp, [](const DecompEntry& e, char32_t v) {
    return e.cp < v;
  });
  return (it != end && it->cp == cp) ? &*it : nullptr;
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul first: L+V and LV+T compose algorithmically.
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  }
  if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
      b > kTBase && b < kTBase + kTCount) {
    return a + (b - kTBase);
  }
  const CompositionPair* begin = kCompositionPairs;
  const CompositionPair* end = kCompositionPairs + kNumCompositionPairs;
  auto it = std::lower_bound(begin, end, std::pair<char32_t, char32_t>{a, b},
                             [](const CompositionPair& p, const std::pair<char32_t, char32_t>& k) {
                               return p.starter != k.first ? p.starter < k.first
                                                           : p.combiner < k.second;
                             });
  if (it != end && it->starter == a && it->combiner == b) return it->composite;
  return 0;
}

void decompose_cp(char32_t cp, std::u32string& out) {
  if (cp >= kSBase && cp < kSBase + kSCount) {
    char32_t index = cp - kSBase;
    out.push_back(kLBase + index / kNCount);
    out.push_back(kVBase + (index % kNCount) / kTCount);
    char32_t t = index % kTCount;
    if (t != 0) out.push_back(kTBase + t);
    return;
  }
  if (const DecompEntry* e = find_decomp(cp)) {
    out.append(kDecompPool + e->offset, e->length);
    return;
  }
  out.push_back(cp);
}

// Canonical ordering: stable sort of nonzero-ccc runs by combining class.
void canonical_order(std::u32string& s) {
  std::size_t n = s.size();
  for (std::size_t i = 1; i < n; ++i) {
    std::uint8_t cc = combining_class(s[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    char32_t cp = s[i];
    while (j > 0 && combining_class(s[j - 1]) > cc) {
      s[j] = s[j - 1];
      --j;
    }
    s[j] = cp;
  }
}

void compose(std::u32string& s) {
  if (s.empty()) return;
  std::size_t out = 0;
  std::ptrdiff_t last_starter = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char32_t cp = s[i];
    std::uint8_t cc = combining_class(cp);
    if (last_starter >= 0) {
      // Not blocked: directly follows the starter, or the previous
      // character has a strictly smaller combining class.
      bool adjacent = out == static_cast<std::size_t>(last_starter) + 1;
      std::uint8_t prev_cc = adjacent ? 0 : combining_class(s[out - 1]);
      if ((adjacent || prev_cc < cc)) {
        if (char32_t p = compose_pair(s[last_starter], cp)) {
          s[last_starter] = p;
          continue;
        }
      }
    }
    s[out] = cp;
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out);
    ++out;
  }
  s.resize(out);
}

bool nfkc_trivial(char32_t cp) {
  if (cp < 0x80) return true;
  if (cp <= 0xFFFF) return bmp().flags[cp] == 0;
  // Astral: conservative slow path.
  if (ccc_slow(cp) != 0) return false;
  if (find_decomp(cp)) return false;
  const CompositionPair* end = kCompositionPairs + kNumCompositionPairs;
  for (const CompositionPair* p = kCompositionPairs; p != end; ++p) {
    if (p->combiner == cp) return false;
  }
  return true;
}

}  // namespace

bool decode_utf8(std::string_view bytes, std::u32string& out) {
  out.clear();
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  const auto* b = reinterpret_cast<const unsigned char*>(bytes.data());
  while (i < n) {
    unsigned char b0 = b[i];
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    unsigned need;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      need = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      need = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      need = 3;
      cp = b0 & 0x07;
    } else {
      return false;
    }
    for (unsigned k = 1; k <= need; ++k) {
      if (i + k >= n) return false;
      unsigned char c = b[i + k];
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[need]) return false;                  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;     // surrogate
    if (cp > kMaxCodePoint) return false;
    out.push_back(cp);
    i += need + 1;
  }
  return true;
}

std::u32string decode_utf8_or_throw(std::string_view bytes) {
  std::u32string out;
  if (!decode_utf8(bytes, out)) {
    throw std::invalid_argument("invalid UTF-8");
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(const std::u32string& cps) {
  std::string out;
  out.reserve(cps.size() + cps.size() / 2);
  for (char32_t cp : cps) encode_utf8(cp, out);
  return out;
}

bool is_nonprintable(char32_t cp) {
  switch (general_category(cp)) {
    case Category::Cc:
    case Category::Cf:
    case Category::Cs:
    case Category::Co:
    case Category::Cn:
      return true;
    default:
      return false;
  }
}

bool is_word_char(char32_t cp) {
  switch (general_category(cp)) {
    case Category::Ll:
    case Category::Lm:
    case Category::Lo:
    case Category::Lt:
    case Category::Lu:
    case Category::Nd:
    case Category::Mc:
    case Category::Me:
    case Category::Mn:
      return true;
    default:
      return false;
  }
}

bool is_space_separator(char32_t cp) {
  if (cp == U' ') return true;
  switch (general_category(cp)) {
    case Category::Zs:
    case Category::Zl:
    case Category::Zp:
      return true;
    default:
      return false;
  }
}

std::uint8_t combining_class(char32_t cp) {
  if (cp <= 0xFFFF) return bmp().ccc[cp];
  return ccc_slow(cp);
}

char32_t fold_case(char32_t cp) {
  if (cp <= 0xFFFF) return bmp().fold[cp];
  const FoldEntry* begin = kFoldEntries;
  const FoldEntry* end = kFoldEntries + kNumFoldEntries;
  auto it = std::lower_bound(begin, end, cp, [](const FoldEntry& e, char32_t v) {
    return e.cp < v;
  });
  return (it != end && it->cp == cp) ? it->folded : cp;
}

std::u32string nfkc(const std::u32string& cps) {
  std::u32string decomposed;
  decomposed.reserve(cps.size() + 4);
  for (char32_t cp : cps) decompose_cp(cp, decomposed);
  canonical_order(decomposed);
  compose(decomposed);
  return decomposed;
}

bool is_nfkc(const std::u32string& cps) {
  bool trivial = true;
  for (char32_t cp : cps) {
    if (!nfkc_trivial(cp)) {
      trivial = false;
      break;
    }
  }
  if (trivial) return true;
  return nfkc(cps) == cps;
}

const char* unicode_version() { return unidata::kUnicodeVersion; }

}  // namespace lrmt::uni
