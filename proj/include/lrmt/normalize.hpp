// Copyright 2026 The lrmt Authors
//
// Licensed under the Apache License, Version 2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Line-level text cleaning: punctuation normalization (fixed rule table),
// non-printable replacement, NFKC, whitespace collapse. All functions are
// pure and total; clean_line is idempotent and its output is NFKC-stable.

#pragma once

#include <string>
#include <string_view>

namespace lrmt {

// Applies the ordered punctuation rule table exactly once:
//   (1) delete U+200B, U+FEFF, U+00AD
//   (2) "-family quotes (U+201E/201C/201D/00AB/00BB) -> ", guillemets also
//       consume their inner padding spaces (U+0020/U+00A0)
//   (3) '-family quotes (U+201A/2018/2019/2039/203A) -> '
//   (4) dashes U+2013/2014/2015 -> -
//   (5) U+2026 -> "..."
//   (6) U+00A0 -> space
//   (7) drop a space directly before , . ! ? ; : % )
//   (8) collapse space runs, trim ends
std::string normalize_punctuation(std::string_view line);

// Replaces every Cc/Cf/Cs/Co/Cn code point with a space; all other code
// points are preserved in order.
std::string replace_nonprintable(std::string_view line);

// Unicode NFKC normalization of the line.
std::string nfkc_line(std::string_view line);

// Full cleaning stack: punctuation -> non-printable -> NFKC -> whitespace
// collapse/trim, iterated to a fixed point so the result is stable under
// re-cleaning.
std::string clean_line(std::string_view line);

// True when clean_line(line) == line.
bool is_clean(std::string_view line);

}  // namespace lrmt
