#!/usr/bin/env python3
# Copyright 2026 The lrmt Authors
#
# Licensed under the Apache License, Version 2.0.
# SPDX-License-Identifier: Apache-2.0
"""Generates the line-cleaning golden corpus and NFKC test vectors.

This is an independent Python reference of the cleaning stack (rule table,
non-printable replacement, unicodedata NFKC, whitespace collapse, fixed
point). The C++ implementation must reproduce data/golden/*.txt byte for
byte; disagreements mean a bug on one side, never "regenerate and move on".

Run: python3 scripts/gen_normalize_golden.py
Writes: data/golden/normalize_input.txt, data/golden/normalize_expected.txt,
        data/golden/nfkc_cases.tsv
"""

import random
import unicodedata

NONPRINTABLE = {"Cc", "Cf", "Cs", "Co", "Cn"}
PRESPACE_PUNCT = set(",.!?;:%)")
PAD = {" ", " "}


def punct_pass(s):
    out = []
    i = 0
    n = len(s)
    while i < n:
        c = s[i]
        if c in "​﻿­":
            pass
        elif c in "„“”":
            out.append('"')
        elif c == "«":
            out.append('"')
            while i + 1 < n and s[i + 1] in PAD:
                i += 1
        elif c == "»":
            while out and out[-1] in PAD:
                out.pop()
            out.append('"')
        elif c in "‚‘’‹›":
            out.append("'")
        elif c in "–—―":
            out.append("-")
        elif c == "…":
            out.append("...")
        elif c == " ":
            out.append(" ")
        else:
            out.append(c)
        i += 1
    s = "".join(out)
    out = []
    i = 0
    n = len(s)
    while i < n:
        if s[i] == " ":
            j = i
            while j < n and s[j] == " ":
                j += 1
            if j < n and s[j] in PRESPACE_PUNCT:
                i = j
                continue
        out.append(s[i])
        i += 1
    s = "".join(out)
    out = []
    for c in s:
        if c == " " and (not out or out[-1] == " "):
            continue
        out.append(c)
    while out and out[-1] == " ":
        out.pop()
    return "".join(out)


def nonprintable_pass(s):
    return "".join(" " if unicodedata.category(c) in NONPRINTABLE else c
                   for c in s)


def whitespace_pass(s):
    out = []
    for c in s:
        if c in "   ":
            c = " "
        if c == " " and (not out or out[-1] == " "):
            continue
        out.append(c)
    while out and out[-1] == " ":
        out.pop()
    return "".join(out)


def clean_pass(s):
    return whitespace_pass(
        unicodedata.normalize("NFKC", nonprintable_pass(punct_pass(s))))


def clean_line(s):
    for _ in range(8):
        nxt = clean_pass(s)
        if nxt == s:
            return s
        s = nxt
    raise AssertionError("no fixed point: %r" % s)


def build_lines():
    lines = []
    add = lines.append

    # quotes and guillemets with padding
    add("“Hello”")
    add("„Goose quotes“ in German style")
    add("« bonjour » le monde")
    add("«  padded  » and «tight»")
    add("single ‘quoted’ and ‚low‘ and ‹angle›")
    add("It’s Rose’s café")
    # dashes and ellipsis
    add("wait… no – yes")
    add("em—dash and horbar―done")
    add("range 1–2—3")
    add("……")
    # zero-width and soft hyphen
    add("zero​width﻿and­soft")
    add("﻿BOM at start")
    # space before punctuation
    add("hello , world !")
    add("what ?  yes :  no ;  50 %  ( ok )")
    add("multi   spaces\tand\ttabs")
    add("  leading and trailing   ")
    # control and format characters
    add("bellchar and escchar")
    add("rlm‏ and lrm‎ and zwj‍ and alm؜")
    add("word⁠joiner and invisible⁤plus")
    # private use / unassigned
    add("privateuse and unassigned͸char ׿ too")
    # compatibility characters
    add("ligature ﬁle and ﬂow")
    add("circled ① ② ③ digits")
    add("fraction ½ and ⅓ and super²")
    add("fullwidth ＡＢＣ and halfwidth ｶﾅ")
    add("roman Ⅰ Ⅳ Ⅸ numerals")
    add("squared ㎡ unit and ℀ care of")
    add("small ﹖question and vertical ︙ellipsis")
    add("ideographic　space and thin space and hair space")
    add("nbsp glue and narrow nbsp")
    add("ogham space and line sep and para sep")
    # NFKC interactions that need a second pass
    add("a ﹖ b")
    add("dots ︙ end")
    add("x ⁇ y")
    # combining sequences, composed and decomposed
    add("café composed café")
    add("á̧ reorder á̧")
    add("angstrom Å and ohm Ω")
    add("doublë́ marks")
    # Hangul
    add("한국어 text")
    add("jamo 각 compose")
    # Bengali / Assamese
    add("অসমীয়া likhan")
    add("বাংলা ভাষা")
    add("bengali digits ০১২৩")
    add("ro ড় and precomposed ড়")
    add("o-kar কো and parts কো")
    add("khanda ta ৎ and virama ৰ্")
    # Meitei Mayek
    add("ꯃꯣꯇꯩ meetei mayek")
    add("ꯐꯥꯒ script")
    # Latin with diacritics (Mizo / Khasi orthography)
    add("Mizo ṭawng with dot")
    add("Khasi ka ktiën jingtip")
    add("u Blei u la ïathuh")
    # astral plane
    add("emoji \U0001f600 kept")
    add("linear b \U00010000 sign")
    add("tag char\U000e0041 dropped")
    add("plane15 \U000f0000 private")
    add("math bold \U0001d400\U0001d401\U0001d402 letters")
    # degenerate
    add("")
    add("​​")
    add("   ")
    add(".")
    add("a")
    # final sigma and folded forms (kept: cleaning does not case-fold)
    add("σοφός greek")
    add("straße and STRAẞe")

    rng = random.Random(20260808)
    quotes = ["“", "”", "„", "«", "»", "‘",
              "’", "‚", "‹", "›"]
    compat = ["ﬁ", "①", "½", "Ａ", "Ⅰ", "㎡",
              "²", "⅓", "﹖", "　", " "]
    controls = ["", "", "‎", "‏", "­", "​",
                "", "͸", "⁠"]
    words = ["ka", "lama", "zote", "hmun", "jingtip", "thlen", "ni",
             "অসম", "ভাষা",
             "ꯃꯣ", "river", "stone", "ṭha", "ïong"]
    for _ in range(150):
        parts = []
        for _ in range(rng.randint(2, 8)):
            r = rng.random()
            if r < 0.55:
                parts.append(rng.choice(words))
            elif r < 0.70:
                parts.append(rng.choice(quotes) + rng.choice(words) +
                             rng.choice(quotes))
            elif r < 0.82:
                parts.append(rng.choice(words) + rng.choice(compat))
            elif r < 0.92:
                parts.append(rng.choice(words) + rng.choice(controls) +
                             rng.choice(words))
            else:
                parts.append(" " + rng.choice(words) + "  ")
        sep = rng.choice([" ", "  ", "  ", " "])
        line = sep.join(parts)
        if rng.random() < 0.3:
            line = line + rng.choice([" .", " !", " ?", " ;", "…"])
        lines.append(line)
    return lines


def nfkc_cases():
    cases = [
        "ﬁ", "①", "abc", "",
        "Å", "Ω", "Å",
        "é", "ȩ́", "ȩ́",
        "ä́", "á̈",
        "가", "각", "한", "각",
        "ড়", "ড়", "কো", "ো",
        "q̣̇", "q̣̇",
        "ﷺ", "㎂", "¼ cup", "⁵", "ｶﾞ",
        "̈́", "क़", "གྷ",
        "´", "΅", "῁",
        "\U0001d400", "\U0001d7ce", "\U0001f100",
        "ẛ̣",
    ]
    rng = random.Random(977)
    pool = [0x0041, 0x0061, 0x00e9, 0x0301, 0x0308, 0x0327, 0x09c7, 0x09be,
            0x09bc, 0x0995, 0x09a1, 0x1100, 0x1161, 0x11a8, 0xfb01, 0x2460,
            0x212b, 0x0020, 0x00a0, 0x2009, 0x1e6d, 0x00eb, 0xabc3, 0xabe3,
            0x1d400, 0x3000, 0xff21]
    for _ in range(120):
        s = "".join(chr(rng.choice(pool)) for _ in range(rng.randint(1, 9)))
        cases.append(s)
    return cases


def escape(s):
    return "".join("\\u{%04X}" % ord(c) for c in s)


def main():
    lines = build_lines()
    assert len(lines) >= 200, len(lines)
    cleaned = [clean_line(l) for l in lines]
    for l, c in zip(lines, cleaned):
        assert "\n" not in l and "\r" not in l
        assert clean_line(c) == c, (l, c)
    with open("data/golden/normalize_input.txt", "w", encoding="utf-8",
              newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    with open("data/golden/normalize_expected.txt", "w", encoding="utf-8",
              newline="\n") as f:
        f.write("\n".join(cleaned) + "\n")

    with open("data/golden/nfkc_cases.tsv", "w", encoding="ascii",
              newline="\n") as f:
        for s in nfkc_cases():
            f.write(escape(s) + "\t" + escape(unicodedata.normalize("NFKC", s))
                    + "\n")
    print("wrote %d golden lines, %d nfkc cases" %
          (len(lines), len(nfkc_cases())))


if __name__ == "__main__":
    main()
