"""Walks in the weighted jump graph K(3,3).

A zero in a circular codeword marks a jump ``xyx``. Consecutive jumps are
separated by one, two or three ones, and the separation fixes how the next
jump is obtained from the previous one. The six jumps with these weighted
transitions form a complete bipartite graph; a closed walk, written as its
cyclic sequence of edge weights over ``{1,2,3}``, spells out a circular
codeword of length ``sum(weights) + len(weights)``.
"""

from typing import Dict, NamedTuple, Optional, Tuple

from .pansiot import BinaryCodeword, is_square_free_codeword
from .words import ALPHABET

WEIGHTS = "123"


class Jump(NamedTuple):
    side: str
    central: str

    @property
    def handedness(self) -> str:
        return "right" if str(self) in RIGHT_JUMPS else "left"

    def __str__(self):
        return self.side + self.central + self.side


RIGHT_JUMPS = ("aba", "bcb", "cac")
LEFT_JUMPS = ("bab", "cbc", "aca")
JUMPS = tuple(Jump(p[0], p[1]) for p in RIGHT_JUMPS + LEFT_JUMPS)


def _third(x, y):
    (z,) = set(ALPHABET) - {x, y}
    return z


def step(j: Jump, w: int) -> Jump:
    """Follow the edge of weight ``w`` out of jump ``j``."""
    side, central = j
    if w == 1:
        return Jump(side, _third(side, central))
    if w == 2:
        return Jump(_third(side, central), central)
    if w == 3:
        return Jump(central, side)
    raise ValueError(f"edge weight must be 1, 2 or 3, got {w!r}")


def edge_weights() -> Dict[Tuple[str, str], int]:
    """Weight of every right-left edge, derived from :func:`step`."""
    table = {}
    for name in RIGHT_JUMPS:
        j = Jump(name[0], name[1])
        for w in (1, 2, 3):
            table[name, str(step(j, w))] = w
    return table


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label or set(label) - set(WEIGHTS):
        raise ValueError(f"walk labels are nonempty strings over {{1,2,3}}, got {label!r}")
    return label


def walk_weight(label: str) -> int:
    """Total edge weight plus length; equals the length of the codeword."""
    check_label(label)
    return sum(map(int, label)) + len(label)


def _end(start: Jump, label: str) -> Jump:
    j = start
    for w in label:
        j = step(j, int(w))
    return j


def is_closed(label: str) -> bool:
    check_label(label)
    verdicts = {_end(j, label) == j for j in JUMPS}
    # closure does not depend on the start vertex
    assert len(verdicts) == 1, label
    return verdicts.pop()


def walk_to_codeword(label: str) -> BinaryCodeword:
    if not is_closed(label):
        raise ValueError(f"walk ({label}) is not closed")
    return BinaryCodeword("".join("0" + "1" * int(w) for w in label), circular=True)


def codeword_to_walk(c: BinaryCodeword) -> Optional[str]:
    """Weights read off the runs of ones between consecutive zeros.

    The label starts at the first zero of the normalized codeword. ``None``
    if there is no zero or some run has length 0 or more than 3.
    """
    if not c.circular:
        raise ValueError("codeword_to_walk expects a circular codeword")
    bits = c.bits
    if "0" not in bits:
        return None
    runs = bits[bits.index("0"):] + bits[: bits.index("0")]
    lengths = [len(r) for r in runs.split("0")[1:]]
    if any(k < 1 or k > 3 for k in lengths):
        return None
    return "".join(map(str, lengths))


# Label factors matching codeword factors 01010, 011011011, 110110110 and
# 11101110111.
FORBIDDEN_WALK_FACTORS = ("11", "222", "223", "322", "333")


def _cyclic_factors(label: str, k: int):
    """Every length-``k`` factor of the circular word ``(label)``."""
    d = label * (k // len(label) + 2)
    return (d[i:i + k] for i in range(len(label)))


def walk_label_forbidden_factor(label: str) -> Optional[str]:
    """First of 11, 222, 223, 322, 333 occurring as a proper cyclic factor."""
    check_label(label)
    for f in FORBIDDEN_WALK_FACTORS:
        if len(f) < len(label) and any(g == f for g in _cyclic_factors(label, len(f))):
            return f
    return None


def _has_period(x: str, t: int) -> bool:
    return x[t:] == x[:-t]


def periodic_closed_root_factor(label: str) -> Optional[Tuple[int, int]]:
    """Find a cyclic factor of length ``2t-2`` with period ``t`` (even,
    ``t >= 4``) whose length-``t`` prefix is a closed walk.

    Returns ``(start, t)`` with a 0-based start, or ``None``.
    """
    n = len(check_label(label))
    d = label * 3
    for t in range(4, n // 2 + 2, 2):
        k = 2 * t - 2
        if k > n:
            break
        for i in range(n):
            x = d[i:i + k]
            if _has_period(x, t) and is_closed(x[:t]):
                return i, t
    return None


def satisfies_walk_criterion(label: str) -> bool:
    """Sufficient condition for a closed walk to spell a square-free codeword:
    no forbidden short factor and no long closed-root periodic factor."""
    if not is_closed(label):
        raise ValueError(f"walk ({label}) is not closed")
    return walk_label_forbidden_factor(label) is None and periodic_closed_root_factor(label) is None


# label -> (codeword bits, codeword length)
SIMPLE_CYCLES = {
    "11": ("0101", 4),
    "22": ("011011", 6),
    "33": ("01110111", 8),
    "1213": ("01011010111", 11),
    "1232": ("010110111011", 12),
    "1323": ("0101110110111", 13),
    "121212": ("010110101101011", 15),
    "123123": ("010110111010110111", 18),
    "132132": ("010111011010111011", 18),
    "131313": ("010111010111010111", 18),
    "232323": ("011011101101110110111", 21),
}


def simple_cycles() -> Dict[str, Tuple[BinaryCodeword, int]]:
    """The simple cycles of the jump graph with their codewords and lengths.

    Every row is checked against the walk machinery and the square-free
    verifier before being returned.
    """
    out = {}
    for label, (bits, length) in SIMPLE_CYCLES.items():
        c = BinaryCodeword(bits, circular=True)
        if not (is_closed(label) and walk_to_codeword(label) == c and len(c) == length
                and walk_weight(label) == length and is_square_free_codeword(c)):
            raise AssertionError(f"simple cycle ({label}) fails its own check")
        out[label] = (c, length)
    return out
