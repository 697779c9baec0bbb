import itertools

import pytest

from circsqf.enumeration import (
    MAX_ENUMERATION_LENGTH,
    count_circular,
    enumerate_circular,
    enumerate_square_free_linear,
    growth_report,
    minimal_square_codewords,
    uniqueness_lengths,
)
from circsqf.k33 import simple_cycles
from circsqf.pansiot import decode_linear, BinaryCodeword, encode_circular
from circsqf.words import CircularWord, is_minimal_square, is_square_free


def test_linear_enumeration():
    assert list(enumerate_square_free_linear(1)) == ["a", "b", "c"]
    assert len(list(enumerate_square_free_linear(2))) == 6
    words = list(enumerate_square_free_linear(5))
    brute = [w for w in map("".join, itertools.product("abc", repeat=5)) if is_square_free(w)]
    assert words == brute and len(words) == 30


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_square_free_linear(MAX_ENUMERATION_LENGTH + 1))
    with pytest.raises(ValueError):
        enumerate_circular(0)


def test_circular_enumeration():
    assert enumerate_circular(5) == [] == enumerate_circular(5, "isomorphism")
    assert enumerate_circular(4, "isomorphism") == [CircularWord("abac")]
    assert len(enumerate_circular(18, "isomorphism")) >= 2


def test_circular_enumeration_against_brute_force():
    for l in range(1, 13):
        brute = set()
        for t in itertools.product("abc", repeat=l):
            s = "".join(t)
            if all(is_square_free(s[i:] + s[:i]) for i in range(l)):
                brute.add(CircularWord(s))
        assert set(enumerate_circular(l)) == brute


def test_count_circular():
    assert (count_circular(7).raw_count, count_circular(7).iso_count) == (0, 0)
    assert count_circular(3).iso_count == 1
    assert count_circular(21).iso_count == 1
    r = count_circular(18, keep=10)
    assert r.iso_count == len(r.representatives) and r.iso_count <= r.raw_count <= 6 * r.iso_count


def test_uniqueness_lengths():
    assert uniqueness_lengths(4) == [1, 2, 3, 4]
    assert uniqueness_lengths(21) == [1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21]


@pytest.mark.parametrize("p, expected", [
    (2, {"00"}),
    (3, {"1111"}),
    (4, {"010101", "101010"}),
    (5, set()),
    (6, {"0110110110", "1101101101", "1011011011"}),
    (7, set()),
])
def test_minimal_square_codewords(p, expected):
    assert minimal_square_codewords(p) == expected


def test_minimal_square_codewords_decode_to_minimal_squares():
    for p in range(2, 13):
        for bits in minimal_square_codewords(p):
            assert len(bits) == 2 * p - 2
            for seed in itertools.permutations("abc", 2):
                assert is_minimal_square(decode_linear(BinaryCodeword(bits), seed))
    with pytest.raises(ValueError):
        minimal_square_codewords(1)


def test_short_lengths_codeword_sets():
    expect = {4: {"0101"}, 5: set(), 6: {"011011"}, 7: set(), 8: {"01110111"}}
    for l, bits in expect.items():
        assert {encode_circular(cw).bits for cw in enumerate_circular(l)} == bits


def test_simple_cycle_codewords_are_enumerated():
    for label, (c, length) in simple_cycles().items():
        assert c in {encode_circular(cw) for cw in enumerate_circular(length)}


def test_growth_report_exception_pattern():
    g = growth_report(5, 10)
    assert g.raw_counts[0] == 0 and g.raw_counts[2] == 0 and g.raw_counts[4:] == [0, 0]
    assert g.raw_counts[1] > 0 and g.raw_counts[3] > 0
    assert g.raw_ratios == []
    g = growth_report(3, 4)
    assert all(c > 0 for c in g.raw_counts)
    with pytest.raises(ValueError):
        growth_report(4, 4)
