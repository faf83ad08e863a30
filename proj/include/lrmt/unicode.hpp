// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Code point level Unicode support: UTF-8 transcoding, general category
// lookup, NFKC normalization, and single code point case folding. Backed
// by tables generated from the Unicode character database (13.0.0); Hangul
// decomposition/composition is algorithmic.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lrmt::uni {

inline constexpr char32_t kMaxCodePoint = 0x10FFFF;

// Decodes UTF-8, returning false on any malformed byte sequence
// (overlong forms, surrogates and out-of-range values rejected).
// On failure `out` holds the code points decoded so far.
bool decode_utf8(std::string_view bytes, std::u32string& out);

// Decodes or throws std::invalid_argument. Convenience for callers that
// have already validated their input.
std::u32string decode_utf8_or_throw(std::string_view bytes);

void encode_utf8(char32_t cp, std::string& out);
std::string encode_utf8(const std::u32string& cps);

// General category predicates used by the cleaning and tokenization rules.
// "Non-printable" covers Cc, Cf, Cs, Co and Cn.
bool is_nonprintable(char32_t cp);
// Letters (L*), decimal digits (Nd) or combining marks (M*).
bool is_word_char(char32_t cp);
// Zs/Zl/Zp or U+0020 (CleanLine text cannot contain Cc whitespace).
bool is_space_separator(char32_t cp);

std::uint8_t combining_class(char32_t cp);

// Single code point simple case folding (identity when unmapped).
char32_t fold_case(char32_t cp);

// NFKC = canonical composition of the canonically ordered compatibility
// decomposition. Idempotent.
std::u32string nfkc(const std::u32string& cps);

// True when nfkc(cps) == cps without materializing the result for the
// common already-normalized case.
bool is_nfkc(const std::u32string& cps);

const char* unicode_version();

}  // namespace lrmt::uni
