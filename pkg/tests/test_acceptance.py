"""Acceptance suite. Each criterion prints one PASS/FAIL line and asserts at
its stated tolerance."""

import itertools
import math
import time

import pytest

from circsqf.construct import EXCEPTIONAL_LENGTHS, NotRepresentable, ZVariant, build_z, construct_word
from circsqf.enumeration import (
    count_circular,
    enumerate_circular,
    growth_report,
    minimal_square_codewords,
    uniqueness_lengths,
)
from circsqf.k33 import (
    JUMPS,
    SIMPLE_CYCLES,
    codeword_to_walk,
    is_closed,
    satisfies_walk_criterion,
    simple_cycles,
    step,
    walk_to_codeword,
    walk_weight,
)
from circsqf.pansiot import (
    BinaryCodeword,
    decode_circular,
    decode_linear,
    encode_circular,
    encode_linear,
    is_square_free_codeword,
)
from circsqf.words import (
    CircularWord,
    are_isomorphic,
    is_circular_square_free,
    is_minimal_square,
    is_square_free,
    iter_square_free,
)
from conftest import ACCEPTANCE_LINES


def record(number, name, ok, detail, started):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {name}: {detail} ({time.perf_counter() - started:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def constructible(l):
    try:
        return construct_word(l)
    except NotRepresentable:
        return None


def test_01_exception_set():
    t0 = time.perf_counter()
    failed, bad = [], []
    for l in range(1, 501):
        cw = constructible(l)
        if cw is None:
            failed.append(l)
        elif len(cw) != l or not is_circular_square_free(cw):
            bad.append(l)
    ok = set(failed) == EXCEPTIONAL_LENGTHS and not bad and time.perf_counter() - t0 < 60
    record(1, "construction fails exactly on the exceptional set in 1..500", ok,
           f"failed at {failed}, unverified {bad}", t0)


def test_02_oracle_agreement():
    t0 = time.perf_counter()
    mismatches = [l for l in range(1, 31) if (count_circular(l).raw_count > 0) != (constructible(l) is not None)]
    ok = not mismatches and time.perf_counter() - t0 < 120
    record(2, "brute force and construction agree on 1..30", ok, f"mismatches {mismatches}", t0)


def test_03_short_codewords():
    t0 = time.perf_counter()
    want = {4: {"0101"}, 5: set(), 6: {"011011"}, 7: set(), 8: {"01110111"}}
    got = {l: {encode_circular(cw).bits for cw in enumerate_circular(l)} for l in want}
    record(3, "codeword sets at lengths 4..8", got == want, f"{got}", t0)


def test_04_simple_cycles():
    t0 = time.perf_counter()
    table = simple_cycles()
    ok = len(table) == 11 and all(
        is_closed(label) and walk_to_codeword(label).bits == bits and walk_weight(label) == length
        and is_square_free_codeword(walk_to_codeword(label))
        for label, (bits, length) in SIMPLE_CYCLES.items()
    )
    record(4, "simple-cycle table", ok, f"{len(table)} cycles checked", t0)


def test_05_lengths_14_to_20():
    t0 = time.perf_counter()
    witnesses = {16: "122122", 19: "123313", 20: "133133"}
    good = {l: walk_weight(w) == l and is_square_free_codeword(walk_to_codeword(w)) for l, w in witnesses.items()}
    none = {l: count_circular(l).raw_count for l in (14, 17)}
    ok = all(good.values()) and not any(none.values())
    record(5, "witnesses at 16, 19, 20 and none at 14, 17", ok, f"witnesses {good}, counts {none}", t0)


def test_06_minimal_square_equivalence():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for n in range(1, 11):
        for t in itertools.product("abc", repeat=n):
            u = "".join(t)
            checked += 1
            if is_minimal_square(u + u) != is_circular_square_free(CircularWord(u)):
                bad.append(u)
    ok = not bad and time.perf_counter() - t0 < 30
    record(6, "uu minimal square iff (u) square-free, |u| <= 10", ok, f"{checked} words, {len(bad)} disagreements", t0)


def test_07_minimal_square_codewords():
    t0 = time.perf_counter()
    want = {
        2: {"00"}, 3: {"1111"}, 4: {"010101", "101010"},
        6: {"0110110110", "1101101101", "1011011011"},
        5: set(), 7: set(), 9: set(), 10: set(),
    }
    got = {p: minimal_square_codewords(p) for p in want}
    record(7, "minimal-square codewords by period", got == want, f"{ {p: sorted(s) for p, s in got.items()} }", t0)


def test_08_uniqueness_list():
    t0 = time.perf_counter()
    got = uniqueness_lengths(30)
    want = [1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21]
    record(8, "lengths with a unique class up to 30", got == want, f"{got}", t0)


def test_09_growth():
    t0 = time.perf_counter()
    g = growth_report(18, 28)
    positive = all(c > 0 for c in g.raw_counts)
    gm = g.raw_geometric_mean
    ok = positive and gm is not None and 1.15 <= gm <= 1.45 and time.perf_counter() - t0 < 120
    record(9, "geometric-mean growth of raw counts on 18..28 in [1.15, 1.45]", ok,
           f"raw counts {g.raw_counts}, mean {gm:.4f} (isomorphism classes {g.iso_geometric_mean:.4f})", t0)


def test_10_round_trips_and_graph_algebra():
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 11):
        for w in iter_square_free(n):
            if n >= 3 and decode_linear(encode_linear(w), (w[0], w[1])) != w:
                failures.append(("linear", w))
    for n in range(3, 13):
        for t in itertools.product("abc", repeat=n):
            cw = CircularWord("".join(t))
            if not is_circular_square_free(cw):
                continue
            back = decode_circular(encode_circular(cw))
            if back is None or not are_isomorphic(back, cw):
                failures.append(("circular", str(cw)))
    pairs = 0
    for j in JUMPS:
        for w in (1, 2, 3):
            pairs += 1
            if step(step(j, w), w) != j:
                failures.append(("involution", str(j), w))
    closed = 0
    for n in range(1, 9):
        for t in itertools.product("123", repeat=n):
            label = "".join(t)
            if not is_closed(label):  # asserts start independence internally
                continue
            closed += 1
            back = codeword_to_walk(walk_to_codeword(label))
            if back is None or len(back) != n or back not in label + label:
                failures.append(("inversion", label))
    ok = not failures and pairs == 18
    record(10, "round trips, involutions, closure, walk inversion", ok,
           f"{pairs} step pairs, {closed} closed labels, failures {failures[:3]}", t0)


def test_11_z_variants_small_scale():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for k in range(1, 6):
        for u in iter_square_free(k):
            for v in ZVariant:
                if k < v.tail_blocks:
                    continue
                label = build_z(u, v)
                checked += 1
                if not (satisfies_walk_criterion(label) and is_square_free_codeword(walk_to_codeword(label))):
                    bad.append((u, v.name))
    record(11, "z-variants meet the walk criterion for |u| <= 5", not bad, f"{checked} walks, failures {bad}", t0)
