#!/usr/bin/env python3
# Copyright 2026 The lrmt Authors
#
# Licensed under the Apache License, Version 2.0.
# SPDX-License-Identifier: Apache-2.0
"""Reference calculator for the metric micro test cases.

Computes expected values for the frozen test vectors in tests/ from the
metric definitions directly: BLEU / chrF / METEOR / RIBES by literal
formula, TER by exhaustive search over shift sequences (so the expected
numerators are optimal, independent of any greedy search order). All
inputs are space-separated tokens so tokenization is trivial here.

Run: python3 scripts/oracle_metrics.py
"""

import itertools
import math
from collections import Counter


def ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(hyps, refs, max_order=4, floor=None):
    match = [0] * (max_order + 1)
    total = [0] * (max_order + 1)
    c = r = 0
    for h, rf in zip(hyps, refs):
        ht, rt = h.split(), rf.split()
        c += len(ht)
        r += len(rt)
        for n in range(1, max_order + 1):
            hn, rn = ngrams(ht, n), ngrams(rt, n)
            match[n] += sum(min(k, rn[g]) for g, k in hn.items())
            total[n] += sum(hn.values())
    logs = []
    for n in range(1, max_order + 1):
        if total[n] == 0:
            continue
        p = match[n] / total[n]
        if p == 0:
            if floor is None:
                return 0.0
            p = floor / total[n]
        logs.append(math.log(p))
    if not logs or c == 0:
        return 0.0
    bp = 1.0 if c > r else math.exp(1.0 - r / c)
    return 100.0 * bp * math.exp(sum(logs) / len(logs))


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i] + [0] * len(b)
        for j, y in enumerate(b, 1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y))
        prev = cur
    return prev[-1]


def ter_optimal_numerator(hyp, ref, max_phrase=10):
    """Minimum (#shifts + levenshtein) over all shift sequences."""
    hyp, ref = tuple(hyp.split()), tuple(ref.split())
    ref_spans = {ref[i:j] for i in range(len(ref))
                 for j in range(i + 1, min(len(ref), i + max_phrase) + 1)}
    best = levenshtein(hyp, ref)
    seen = {hyp}
    frontier = [hyp]
    g = 0
    while frontier and g + 1 < best:
        g += 1
        nxt = []
        for state in frontier:
            n = len(state)
            for i in range(n):
                for ln in range(1, min(max_phrase, n - i) + 1):
                    span = state[i:i + ln]
                    if span not in ref_spans:
                        continue
                    rest = state[:i] + state[i + ln:]
                    for j in range(len(rest) + 1):
                        if j == i:
                            continue
                        cand = rest[:j] + span + rest[j:]
                        if cand in seen:
                            continue
                        seen.add(cand)
                        best = min(best, g + levenshtein(cand, ref))
                        nxt.append(cand)
        frontier = nxt
    return best


def ter(hyp, ref):
    rt = ref.split()
    return 100.0 * ter_optimal_numerator(hyp, ref) / len(rt)


def ribes_align(hyp, ref):
    """One-to-one alignment; unigram rule, then left/right bigram context."""
    hc, rc = Counter(hyp), Counter(ref)
    hb = Counter(zip(hyp, hyp[1:]))
    rb = Counter(zip(ref, ref[1:]))
    used = set()
    aligned = []
    for i, w in enumerate(hyp):
        pos = None
        if hc[w] == 1 and rc[w] == 1:
            pos = ref.index(w)
        else:
            if i > 0 and hb[(hyp[i - 1], w)] == 1 and rb[(hyp[i - 1], w)] == 1:
                for j in range(1, len(ref)):
                    if ref[j - 1] == hyp[i - 1] and ref[j] == w:
                        pos = j
                        break
            if pos is None and i + 1 < len(hyp) \
                    and hb[(w, hyp[i + 1])] == 1 and rb[(w, hyp[i + 1])] == 1:
                for j in range(len(ref) - 1):
                    if ref[j] == w and ref[j + 1] == hyp[i + 1]:
                        pos = j
                        break
        if pos is not None and pos not in used:
            used.add(pos)
            aligned.append(pos)
    return aligned


def ribes(hyp, ref, alpha=0.25, beta=0.10):
    ht, rt = hyp.split(), ref.split()
    if not ht:
        return 0.0
    L = ribes_align(ht, rt)
    if len(L) < 2:
        return 0.0
    pairs = list(itertools.combinations(L, 2))
    conc = sum(1 for a, b in pairs if a < b)
    disc = sum(1 for a, b in pairs if a > b)
    tau = (conc - disc) / len(pairs)
    nkt = (tau + 1) / 2
    p = len(L) / len(ht)
    bp = min(1.0, math.exp(1.0 - len(rt) / len(ht)))
    return nkt * (p ** alpha) * (bp ** beta)


def ribes_corpus(hyps, refs):
    return sum(ribes(h, r) for h, r in zip(hyps, refs)) / len(hyps)


def meteor_best_chunks(ht, rt):
    """(max matching size, min chunks over all maximum matchings)."""
    hc, rc = Counter(ht), Counter(rt)
    quota = {w: min(hc[w], rc[w]) for w in hc if w in rc}
    m = sum(quota.values())
    if m == 0:
        return 0, 0
    remaining_h = Counter(ht)
    best = [m + 1]

    def chunks_of(pairs):
        ch = 0
        prev = None
        for hpos, rpos in pairs:
            if prev is None or hpos != prev[0] + 1 or rpos != prev[1] + 1:
                ch += 1
            prev = (hpos, rpos)
        return ch

    def rec(i, used_ref, matched, pairs):
        if i == len(ht):
            if matched == m:
                best[0] = min(best[0], chunks_of(pairs))
            return
        w = ht[i]
        remaining_h[w] -= 1
        need = quota.get(w, 0) - sum(1 for p in pairs if ht[p[0]] == w)
        if w in quota:
            for j, y in enumerate(rt):
                if y == w and j not in used_ref:
                    rec(i + 1, used_ref | {j}, matched + 1, pairs + [(i, j)])
        if need <= remaining_h[w] if w in quota else True:
            rec(i + 1, used_ref, matched, pairs)
        remaining_h[w] += 1

    rec(0, frozenset(), 0, [])
    return m, best[0]


def meteor(hyps, refs):
    M = H = R = S = 0
    for h, r in zip(hyps, refs):
        ht, rt = h.split(), r.split()
        m, ch = meteor_best_chunks(ht, rt)
        M += m
        H += len(ht)
        R += len(rt)
        S += ch
    if M == 0 or H == 0 or R == 0:
        return 0.0
    p = M / H
    rr = M / R
    f = 10 * p * rr / (rr + 9 * p)
    penalty = 0.5 * (S / M) ** 3
    return f * (1 - penalty)


def char_ngrams(text, n):
    chars = [c for c in text if not c.isspace()]
    return Counter(tuple(chars[i:i + n]) for i in range(len(chars) - n + 1))


def chrf(hyps, refs, max_order=6, beta=2.0):
    ps, rs = [], []
    for n in range(1, max_order + 1):
        match = th = tr = 0
        for h, r in zip(hyps, refs):
            hn, rn = char_ngrams(h, n), char_ngrams(r, n)
            match += sum(min(k, rn[g]) for g, k in hn.items())
            th += sum(hn.values())
            tr += sum(rn.values())
        if th == 0 and tr == 0:
            continue
        ps.append(match / th if th else 0.0)
        rs.append(match / tr if tr else 0.0)
    if not ps:
        return 0.0
    P = sum(ps) / len(ps)
    R = sum(rs) / len(rs)
    denom = beta * beta * P + R
    if denom == 0:
        return 0.0
    return 100.0 * (1 + beta * beta) * P * R / denom


def show(name, value):
    print(f"{name} = {value:.10f}")


def main():
    print("# BLEU")
    show("b1_worked_example", bleu(["the cat sat"], ["the cat sat down"]))
    show("b2_identity", bleu(["a b c d"], ["a b c d"]))
    show("b3_zero_bigram", bleu(["the the the"], ["the cat"]))
    show("b4_bp", bleu(["a b c d"], ["a b c d e f"]))
    show("b5_zero_trigram", bleu(["a b x d"], ["a b c d"]))
    show("b6_floor", bleu(["a b x d"], ["a b c d"], floor=0.1))
    show("b7_pooled", bleu(["a b", "c d"], ["a b", "c x"]))
    show("b8_clip_floor", bleu(["the the the the"], ["the the cat"], floor=0.1))
    show("b9_short", bleu(["a"], ["a b c"]))
    show("b10_disjoint", bleu(["a b c"], ["x y z"]))
    show("b11_order2", bleu(["a b c"], ["a b c"], max_order=2))
    show("b12_two_seg_bp", bleu(["a b c", "d e"], ["a b c d", "d e f"]))

    print("# TER (optimal numerators / percent)")
    for name, h, r in [
        ("t1_identity", "a b c d", "a b c d"),
        ("t2_sub", "a b c e", "a b c d"),
        ("t3_shift", "b a c d", "a b c d"),
        ("t4_del", "a b c", "a b c d"),
        ("t5_ins", "a b c d e", "a b c d"),
        ("t6_empty_hyp", "", "a b"),
        ("t7_block_shift", "c d a b", "a b c d"),
        ("t8_two_shifts", "b a d c", "a b c d"),
        ("t9_shift3", "a x b", "a b x"),
        ("t10_all_sub", "x y z", "a b c"),
        ("t11_repeat", "the cat the", "the the cat"),
        ("t12_shift_resid", "c d a b e", "a b c d"),
    ]:
        show(name, ter(h, r))
        print(f"  {name}_numerator = {ter_optimal_numerator(h, r)}")

    print("# RIBES")
    show("r1_identity", ribes("a b c", "a b c"))
    show("r2_swap", ribes("b a", "a b"))
    show("r3_worked_example", ribes("a c b", "a b c"))
    show("r4_short_bp", ribes("a b", "a b c"))
    show("r5_precision", ribes("a b c x", "a b c"))
    show("r6_unaligned_mid", ribes("a x c", "a b c"))
    show("r7_single_align", ribes("a y z", "a b c"))
    show("r8_bigram_ctx", ribes("the cat the dog", "the cat the dog"))
    show("r9_empty_hyp", ribes("", "a b"))
    show("r10_reversed", ribes("c b a", "a b c"))
    show("r11_partial", ribes("a b d c", "a b c d"))
    show("r12_bigram_amb", ribes("the x", "the the x"))
    show("rc1_corpus_mean", ribes_corpus(["a b c", "b a"], ["a b c", "a b"]))

    print("# METEOR")
    show("m1_identity3", meteor(["a b c"], ["a b c"]))
    show("m2_disjoint", meteor(["p q"], ["x y"]))
    show("m3_swap", meteor(["b a"], ["a b"]))
    show("m4_identity4", meteor(["a b c d"], ["a b c d"]))
    show("m5_partial", meteor(["a b x"], ["a b y"]))
    show("m6_gap", meteor(["a x b"], ["a b"]))
    show("m7_rotate", meteor(["a b c"], ["c a b"]))
    show("m8_repeat_min", meteor(["the cat the"], ["the the cat"]))
    show("m9_pooled", meteor(["a b c", "x y"], ["a b c", "x z"]))
    show("m10_prec", meteor(["a b c d"], ["a b"]))
    show("m11_3chunks", meteor(["b a c"], ["a b c"]))
    show("m12_choice", meteor(["a a b"], ["a b"]))
    print("  m8 m/chunks =", meteor_best_chunks("the cat the".split(),
                                                "the the cat".split()))
    print("  m12 m/chunks =", meteor_best_chunks("a a b".split(), "a b".split()))

    print("# chrF")
    show("c1_identity", chrf(["abcd"], ["abcd"]))
    show("c2_disjoint", chrf(["ab"], ["xy"]))
    show("c3_worked_example", chrf(["abcd"], ["abce"]))
    show("c4_whitespace", chrf(["ab cd"], ["abcd"]))
    show("c5_short_hyp", chrf(["abc"], ["abcdef"]))
    show("c6_long_hyp", chrf(["abcdef"], ["abc"]))
    show("c7_single", chrf(["a"], ["a"]))
    show("c8_repeat", chrf(["aa"], ["a"]))
    show("c9_case", chrf(["Abc"], ["abc"]))
    show("c10_pooled", chrf(["ab", "cd"], ["ab", "ce"]))
    show("c12_beta1", chrf(["abc"], ["abcdef"], beta=1.0))
    show("c13_order2", chrf(["abc"], ["abc"], max_order=2))

    print("# evaluate_all identity meteor")
    show("e1_meteor", meteor(["a b c", "d e f g"], ["a b c", "d e f g"]))


if __name__ == "__main__":
    main()
