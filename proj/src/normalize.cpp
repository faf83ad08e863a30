// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0

#include "lrmt/normalize.hpp"

#include <cassert>

#include "lrmt/unicode.hpp"

namespace lrmt {
namespace {

bool is_padding_space(char32_t cp) { return cp == U' ' || cp == 0x00A0; }

bool is_prespace_punct(char32_t cp) {
  switch (cp) {
    case U',':
    case U'.':
    case U'!':
    case U'?':
    case U';':
    case U':':
    case U'%':
    case U')':
      return true;
    default:
      return false;
  }
}

std::u32string punctuation_pass(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    char32_t cp = in[i];
    switch (cp) {
      case 0x200B:  // zero width space
      case 0xFEFF:  // zero width no-break space / BOM
      case 0x00AD:  // soft hyphen
        break;
      case 0x201E:
      case 0x201C:
      case 0x201D:
        out.push_back(U'"');
        break;
      case 0x00AB:  // left guillemet: swallow inner padding after it
        out.push_back(U'"');
        while (i + 1 < in.size() && is_padding_space(in[i + 1])) ++i;
        break;
      case 0x00BB:  // right guillemet: swallow inner padding before it
        while (!out.empty() && is_padding_space(out.back())) out.pop_back();
        out.push_back(U'"');
        break;
      case 0x201A:
      case 0x2018:
      case 0x2019:
      case 0x2039:
      case 0x203A:
        out.push_back(U'\'');
        break;
      case 0x2013:
      case 0x2014:
      case 0x2015:
        out.push_back(U'-');
        break;
      case 0x2026:
        out.append(U"...");
        break;
      case 0x00A0:
        out.push_back(U' ');
        break;
      default:
        out.push_back(cp);
    }
  }
  // (7) drop the space run directly before closing punctuation
  std::u32string no_presp;
  no_presp.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == U' ') {
      std::size_t j = i;
      while (j < out.size() && out[j] == U' ') ++j;
      if (j < out.size() && is_prespace_punct(out[j])) {
        i = j - 1;
        continue;
      }
    }
    no_presp.push_back(out[i]);
  }
  // (8) collapse space runs and trim
  std::u32string collapsed;
  collapsed.reserve(no_presp.size());
  for (char32_t cp : no_presp) {
    if (cp == U' ' && (collapsed.empty() || collapsed.back() == U' ')) continue;
    collapsed.push_back(cp);
  }
  while (!collapsed.empty() && collapsed.back() == U' ') collapsed.pop_back();
  return collapsed;
}

std::u32string nonprintable_pass(const std::u32string& in) {
  std::u32string out(in);
  for (char32_t& cp : out) {
    if (uni::is_nonprintable(cp)) cp = U' ';
  }
  return out;
}

// NFKC leaves no WSpace=Y code point other than U+0020, U+1680, U+2028 and
// U+2029 (Cc whitespace was already replaced). Map the latter three to a
// plain space, then collapse runs and trim.
std::u32string whitespace_pass(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    if (cp == 0x1680 || cp == 0x2028 || cp == 0x2029) cp = U' ';
    if (cp == U' ' && (out.empty() || out.back() == U' ')) continue;
    out.push_back(cp);
  }
  while (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

std::u32string clean_pass(const std::u32string& in) {
  return whitespace_pass(uni::nfkc(nonprintable_pass(punctuation_pass(in))));
}

// Cheap post-pass stability scan: another pass can only change the line if
// NFKC surfaced a rule-table character (e.g. U+FE19 -> U+2026) or created a
// space-before-punctuation position (e.g. U+2009 -> space before "!").
bool needs_another_pass(const std::u32string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char32_t cp = s[i];
    switch (cp) {
      case 0x200B:
      case 0xFEFF:
      case 0x00AD:
      case 0x201E:
      case 0x201C:
      case 0x201D:
      case 0x00AB:
      case 0x00BB:
      case 0x201A:
      case 0x2018:
      case 0x2019:
      case 0x2039:
      case 0x203A:
      case 0x2013:
      case 0x2014:
      case 0x2015:
      case 0x2026:
      case 0x00A0:
      case 0x1680:
      case 0x2028:
      case 0x2029:
        return true;
      default:
        break;
    }
    if (cp == U' ' && i + 1 < s.size() && is_prespace_punct(s[i + 1])) return true;
  }
  return false;
}

}  // namespace

std::string normalize_punctuation(std::string_view line) {
  return uni::encode_utf8(punctuation_pass(uni::decode_utf8_or_throw(line)));
}

std::string replace_nonprintable(std::string_view line) {
  return uni::encode_utf8(nonprintable_pass(uni::decode_utf8_or_throw(line)));
}

std::string nfkc_line(std::string_view line) {
  std::u32string cps = uni::decode_utf8_or_throw(line);
  if (uni::is_nfkc(cps)) return std::string(line);
  return uni::encode_utf8(uni::nfkc(cps));
}

std::string clean_line(std::string_view line) {
  std::u32string cur = uni::decode_utf8_or_throw(line);
  std::u32string next = clean_pass(cur);
  // Iterate to a fixed point; NFKC can resurface rule-table punctuation.
  // Converges in <= 4 passes (every pass strictly shrinks the set of
  // non-ASCII rewritables), the cap is a safety net.
  for (int pass = 0; pass < 8 && needs_another_pass(next); ++pass) {
    cur.swap(next);
    next = clean_pass(cur);
    if (next == cur) break;
  }
  return uni::encode_utf8(next);
}

bool is_clean(std::string_view line) { return clean_line(line) == line; }

}  // namespace lrmt
