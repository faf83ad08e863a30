#!/usr/bin/env python3
# Copyright 2026 The lrmt Authors
#
# Licensed under the Apache License, Version 2.0.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates src/unicode_data.cpp from Python's unicodedata module.

Emits, as plain C++ arrays:
  - general category ranges for every code point (run-length encoded)
  - canonical combining class ranges (nonzero classes only)
  - fully-expanded compatibility (NFKD) decompositions, Hangul excluded
    (Hangul decomposition/composition is algorithmic and lives in code)
  - primary canonical composition pairs, derived by probing NFC so that
    composition exclusions are honored without needing the UCD text files
  - single code point case-folding map (casefold() restricted to 1:1
    mappings, falling back to 1:1 lower())

Usage: python3 scripts/gen_unicode_tables.py > src/unicode_data.cpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_FIRST = 0xAC00
HANGUL_LAST = 0xD7A3

CATEGORIES = [
    "Cc", "Cf", "Cn", "Co", "Cs",
    "Ll", "Lm", "Lo", "Lt", "Lu",
    "Mc", "Me", "Mn",
    "Nd", "Nl", "No",
    "Pc", "Pd", "Pe", "Pf", "Pi", "Po", "Ps",
    "Sc", "Sk", "Sm", "So",
    "Zl", "Zp", "Zs",
]
CAT_INDEX = {c: i for i, c in enumerate(CATEGORIES)}


def category_ranges():
    ranges = []
    start = 0
    cur = unicodedata.category(chr(0))
    for cp in range(1, MAX_CP):
        cat = unicodedata.category(chr(cp))
        if cat != cur:
            ranges.append((start, cp - 1, CAT_INDEX[cur]))
            start = cp
            cur = cat
    ranges.append((start, MAX_CP - 1, CAT_INDEX[cur]))
    return ranges


def ccc_ranges():
    ranges = []
    start = None
    cur = 0
    for cp in range(MAX_CP):
        ccc = unicodedata.combining(chr(cp))
        if ccc != cur:
            if cur != 0:
                ranges.append((start, cp - 1, cur))
            start = cp
            cur = ccc
    if cur != 0:
        ranges.append((start, MAX_CP - 1, cur))
    return ranges


def nfkd_table():
    entries = []
    pool = []
    for cp in range(MAX_CP):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        try:
            s = unicodedata.normalize("NFKD", ch)
        except ValueError:
            continue
        if s == ch:
            continue
        cps = [ord(c) for c in s]
        entries.append((cp, len(pool), len(cps)))
        pool.extend(cps)
    return entries, pool


def composition_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        if 0xD800 <= cp <= 0xDFFF:
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue
        parts = [int(p, 16) for p in d.split()]
        if len(parts) != 2:
            continue
        a, b = parts
        # NFC probing honors composition exclusions and non-starter rules.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort(key=lambda t: (t[0], t[1]))
    return pairs


def fold_table():
    entries = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        f = ch.casefold()
        if len(f) == 1 and f != ch:
            entries.append((cp, ord(f)))
            continue
        if len(f) > 1:
            l = ch.lower()
            if len(l) == 1 and l != ch:
                entries.append((cp, ord(l)))
    return entries


def emit(out):
    cat = category_ranges()
    ccc = ccc_ranges()
    decomp, pool = nfkd_table()
    comp = composition_pairs()
    fold = fold_table()

    w = out.write
    w("// Copyright 2026 The lrmt Authors\n")
    w("//\n")
    w("// Licensed under the Apache License, Version 2.0.\n")
    w("// SPDX-License-Identifier: Apache-2.0\n")
    w("//\n")
    w("// Generated by scripts/gen_unicode_tables.py from Python %s\n"
      % (".".join(map(str, sys.version_info[:3]))))
    w("// Unicode character database version %s. Do not edit by hand.\n\n"
      % unicodedata.unidata_version)
    w('#include "unicode_data.hpp"\n\n')
    w("namespace lrmt::unidata {\n\n")

    w('const char kUnicodeVersion[] = "%s";\n\n' % unicodedata.unidata_version)

    w("const CategoryRange kCategoryRanges[] = {\n")
    for i in range(0, len(cat), 4):
        row = ",".join("{0x%X,0x%X,%d}" % r for r in cat[i:i + 4])
        w("    %s,\n" % row)
    w("};\n")
    w("const std::size_t kNumCategoryRanges = %d;\n\n" % len(cat))

    w("const CccRange kCccRanges[] = {\n")
    for i in range(0, len(ccc), 4):
        row = ",".join("{0x%X,0x%X,%d}" % r for r in ccc[i:i + 4])
        w("    %s,\n" % row)
    w("};\n")
    w("const std::size_t kNumCccRanges = %d;\n\n" % len(ccc))

    w("const DecompEntry kDecompEntries[] = {\n")
    for i in range(0, len(decomp), 4):
        row = ",".join("{0x%X,%d,%d}" % e for e in decomp[i:i + 4])
        w("    %s,\n" % row)
    w("};\n")
    w("const std::size_t kNumDecompEntries = %d;\n\n" % len(decomp))

    w("const char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        row = ",".join("0x%X" % v for v in pool[i:i + 12])
        w("    %s,\n" % row)
    w("};\n\n")

    w("const CompositionPair kCompositionPairs[] = {\n")
    for i in range(0, len(comp), 4):
        row = ",".join("{0x%X,0x%X,0x%X}" % p for p in comp[i:i + 4])
        w("    %s,\n" % row)
    w("};\n")
    w("const std::size_t kNumCompositionPairs = %d;\n\n" % len(comp))

    w("const FoldEntry kFoldEntries[] = {\n")
    for i in range(0, len(fold), 6):
        row = ",".join("{0x%X,0x%X}" % e for e in fold[i:i + 6])
        w("    %s,\n" % row)
    w("};\n")
    w("const std::size_t kNumFoldEntries = %d;\n\n" % len(fold))

    w("}  // namespace lrmt::unidata\n")

    sys.stderr.write(
        "category ranges: %d, ccc ranges: %d, decompositions: %d (pool %d), "
        "composition pairs: %d, fold entries: %d\n"
        % (len(cat), len(ccc), len(decomp), len(pool), len(comp), len(fold)))


if __name__ == "__main__":
    emit(sys.stdout)
