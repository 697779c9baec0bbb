"""Brute-force oracle: exhaustive enumeration of square-free circular words.

Independent of the walk construction. Linear square-free words come from a
depth-first search over square-free prefixes; circular ones are filtered from
them and deduplicated by rotation or by isomorphism.
"""

import math
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from ._accel import kernels
from .pansiot import encode_linear
from .words import CircularWord, canonical_iso_form, conjugates, is_circular_square_free

MAX_ENUMERATION_LENGTH = 35

# Growth constant of ternary square-free *linear* words, quoted for
# comparison only.
LINEAR_GROWTH_REFERENCE = 1.30176

ROTATION, ISOMORPHISM = "rotation", "isomorphism"


def _check_length(l: int, lo: int = 0) -> None:
    if not isinstance(l, int) or l < lo:
        raise ValueError(f"length must be an integer >= {lo}, got {l!r}")
    if l > MAX_ENUMERATION_LENGTH:
        raise ValueError(f"enumeration is capped at length {MAX_ENUMERATION_LENGTH}, got {l}")


def enumerate_square_free_linear(l: int) -> Iterator[str]:
    """All square-free words over {a,b,c} of length ``l``, lexicographically."""
    _check_length(l)
    return (w.decode("ascii") for w in kernels.square_free_words(l, b"abc"))


def enumerate_circular(l: int, dedup: str = ROTATION) -> List[CircularWord]:
    """Square-free circular words of length ``l``, one per rotation class
    (``dedup="rotation"``) or per isomorphism class (``"isomorphism"``), sorted."""
    _check_length(l, 1)
    if dedup not in (ROTATION, ISOMORPHISM):
        raise ValueError(f"dedup must be 'rotation' or 'isomorphism', got {dedup!r}")
    found = set()
    for w in enumerate_square_free_linear(l):
        cw = CircularWord(w)
        if cw in found or not is_circular_square_free(cw):
            continue
        found.add(cw)
    if dedup == ISOMORPHISM:
        found = {canonical_iso_form(cw) for cw in found}
    return sorted(found)


@dataclass
class EnumerationReport:
    length: int
    raw_count: int
    iso_count: int
    representatives: List[CircularWord] = field(default_factory=list)


def count_circular(l: int, keep: int = 0) -> EnumerationReport:
    """Counts of square-free circular words of length ``l``; the first ``keep``
    isomorphism-class representatives are attached."""
    raw = enumerate_circular(l, ROTATION)
    iso = sorted({canonical_iso_form(cw) for cw in raw})
    return EnumerationReport(l, len(raw), len(iso), iso[:keep])


def uniqueness_lengths(max_l: int) -> List[int]:
    """Lengths up to ``max_l`` with exactly one isomorphism class."""
    _check_length(max_l, 1)
    return [l for l in range(1, max_l + 1) if count_circular(l).iso_count == 1]


def minimal_square_codewords(p: int) -> set:
    """Pansiot codewords (length ``2p-2``) of all minimal squares of period ``p``.

    Roots of minimal squares are exactly the conjugates of square-free
    circular words of length ``p``; one class per isomorphism type suffices
    since codewords do not see letter renaming.
    """
    if p < 2:
        raise ValueError("minimal squares of period < 2 have no codeword")
    _check_length(p, 2)
    out = set()
    for cw in enumerate_circular(p, ISOMORPHISM):
        for u in conjugates(cw):
            out.add(encode_linear(u + u).bits)
    return out


@dataclass
class GrowthReport:
    lengths: List[int]
    raw_counts: List[int]
    iso_counts: List[int]
    raw_ratios: List[Tuple[int, float]]
    iso_ratios: List[Tuple[int, float]]
    raw_geometric_mean: Optional[float]
    iso_geometric_mean: Optional[float]


def _ratios(lengths, counts):
    return [
        (l1, c1 / c0)
        for (l0, c0), (l1, c1) in zip(zip(lengths, counts), zip(lengths[1:], counts[1:]))
        if c0 > 0 and c1 > 0
    ]


def _geometric_mean(ratios):
    if not ratios:
        return None
    return math.exp(sum(math.log(r) for _, r in ratios) / len(ratios))


def growth_report(l_min: int, l_max: int) -> GrowthReport:
    """Per-length counts on ``[l_min, l_max]`` with consecutive ratios.

    Ratios are taken only between neighbouring lengths that both have
    positive counts; the geometric mean is over those ratios.
    """
    _check_length(l_max, 1)
    if not 1 <= l_min < l_max:
        raise ValueError(f"need 1 <= l_min < l_max, got {l_min}, {l_max}")
    lengths = list(range(l_min, l_max + 1))
    reports = [count_circular(l) for l in lengths]
    raw = [r.raw_count for r in reports]
    iso = [r.iso_count for r in reports]
    raw_r, iso_r = _ratios(lengths, raw), _ratios(lengths, iso)
    return GrowthReport(lengths, raw, iso, raw_r, iso_r, _geometric_mean(raw_r), _geometric_mean(iso_r))
