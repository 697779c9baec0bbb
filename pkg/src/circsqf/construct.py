"""Explicit square-free circular ternary words of every feasible length.

Long words come from closed walks built out of the block morphism

    a -> 122133,  b -> 123123,  c -> 132132

applied to a square-free word ``u``. One tail variant (last block replaced by
131313 or 121212, or the last two blocks by 131313121212) fixes the residue
0 or 15 modulo 18, and a single block replacement from :data:`REPLACEMENT_TABLE`
reaches the remaining residues. Lengths up to 32 use short fixed walks.

Every result is re-checked by the independent square-freeness verifier before
it is returned.
"""

import enum
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from .k33 import is_closed, walk_to_codeword, walk_weight
from .pansiot import BinaryCodeword, decode_circular, is_square_free_codeword
from .words import (
    ALPHABET,
    BIJECTIONS,
    CircularWord,
    check_word,
    is_circular_square_free,
    is_square_free,
    iter_square_free,
)

EXCEPTIONAL_LENGTHS = frozenset({5, 7, 9, 10, 14, 17})

H_BLOCKS = {"a": "122133", "b": "123123", "c": "132132"}
Z3_TAIL = "131313"
Z2_TAIL = "121212"
Z32_TAIL = Z3_TAIL + Z2_TAIL


class NotRepresentable(ValueError):
    """No square-free circular ternary word of the requested length exists."""


class ConstructionFault(RuntimeError):
    """A constructed word failed independent verification."""


class ZVariant(enum.Enum):
    Z3 = "z3"
    Z2 = "z2"
    Z32 = "z32"

    @property
    def tail(self) -> str:
        return {ZVariant.Z3: Z3_TAIL, ZVariant.Z2: Z2_TAIL, ZVariant.Z32: Z32_TAIL}[self]

    @property
    def tail_blocks(self) -> int:
        """Number of trailing blocks of h(u) the tail replaces."""
        return 2 if self is ZVariant.Z32 else 1

    def weight(self, k: int) -> int:
        """Walk weight of the variant built from ``u`` of length ``k``."""
        return 18 * k if self is ZVariant.Z3 else 18 * k - 3


def h_image(u: str) -> str:
    check_word(u)
    if not u:
        raise ValueError("h_image needs a nonempty word")
    return "".join(H_BLOCKS[x] for x in u)


def _blocks(u: str, variant: ZVariant) -> list:
    """h(u) as a list of blocks with the variant's tail as the last entry."""
    if not is_square_free(u):
        raise ValueError(f"{u!r} is not square-free")
    if len(u) < variant.tail_blocks:
        raise ValueError(f"{variant.name} needs |u| >= {variant.tail_blocks}")
    blocks = [H_BLOCKS[x] for x in u[: len(u) - variant.tail_blocks]]
    if variant is ZVariant.Z32:
        return blocks + [Z3_TAIL, Z2_TAIL]
    return blocks + [variant.tail]


def build_z(u: str, variant: ZVariant) -> str:
    check_word(u)
    return "".join(_blocks(u, variant))


@dataclass(frozen=True)
class BaseWordConstraint:
    position: int  # 1-based
    mode: str  # "require" or "forbid"
    letter: str

    def holds(self, u: str) -> bool:
        return (u[self.position - 1] == self.letter) == (self.mode == "require")


def base_word(n: int, constraints: Iterable[BaseWordConstraint] = ()) -> str:
    """Square-free word of length ``n`` meeting ``constraints``.

    Walks the square-free words in lexicographic order and returns the first
    image, under the six letter bijections tried in a fixed order, that meets
    every constraint.
    """
    if n < 1:
        raise ValueError("base words are nonempty")
    constraints = tuple(constraints)
    for c in constraints:
        if not 1 <= c.position <= n or c.mode not in ("require", "forbid") or c.letter not in ALPHABET:
            raise ValueError(f"bad constraint {c!r} for length {n}")
    for u in iter_square_free(n):
        for b in BIJECTIONS:
            v = u.translate(b)
            if all(c.holds(v) for c in constraints):
                return v
    raise ValueError(f"no square-free word of length {n} meets {constraints!r}")


# Replacement anchors: the tail itself, the block right before the tail, or
# the block right after it (cyclically, the first block).
TAIL, BEFORE, AFTER = "tail", "before", "after"


@dataclass(frozen=True)
class ReplacementRule:
    residue: int
    base: ZVariant
    min_n: int
    anchor: str
    new_block: str
    anchor_letter: Optional[str] = None  # letter of u whose block is replaced
    max_n: Optional[int] = None
    first_not: Optional[str] = None  # letter the first letter of u must avoid

    @property
    def old_block(self) -> str:
        return Z3_TAIL if self.anchor == TAIL else H_BLOCKS[self.anchor_letter]

    @property
    def delta(self) -> int:
        return walk_weight(self.new_block) - walk_weight(self.old_block)

    def base_length(self, n: int) -> int:
        """Length of ``u`` making the final walk weigh ``18n + residue``."""
        k, r = divmod(18 * n + self.residue - self.delta - self.base.weight(0), 18)
        assert r == 0, self
        return k

    def applies(self, n: int) -> bool:
        return n >= self.min_n and (self.max_n is None or n <= self.max_n)

    def constraints(self, k: int) -> FrozenSet[BaseWordConstraint]:
        out = set()
        if self.anchor == BEFORE:
            out.add(BaseWordConstraint(k - self.base.tail_blocks, "require", self.anchor_letter))
        elif self.anchor == AFTER:
            out.add(BaseWordConstraint(1, "require", self.anchor_letter))
        if self.first_not is not None:
            out.add(BaseWordConstraint(1, "forbid", self.first_not))
        return frozenset(out)

    def build(self, n: int, u: Optional[str] = None) -> str:
        """Walk label of weight ``18n + residue``; ``u`` defaults to
        :func:`base_word` under this rule's constraints."""
        if not self.applies(n):
            raise ValueError(f"row m={self.residue} does not apply to n={n}")
        k = self.base_length(n)
        cons = self.constraints(k)
        if u is None:
            u = base_word(k, cons)
        elif len(u) != k or not all(c.holds(u) for c in cons):
            raise ValueError(f"{u!r} does not fit row m={self.residue}, n={n}")
        blocks = _blocks(u, self.base)
        tail_at = len(blocks) - self.base.tail_blocks
        if self.anchor == TAIL:
            i = tail_at
        elif self.anchor == BEFORE:
            i = tail_at - 1
        else:
            i = 0
        if blocks[i] != self.old_block:
            raise ConstructionFault(f"row m={self.residue}: expected {self.old_block}, found {blocks[i]}")
        blocks[i] = self.new_block
        label = "".join(blocks)
        assert walk_weight(label) == 18 * n + self.residue, (self, n, label)
        return label


_Z2, _Z3, _Z32 = ZVariant.Z2, ZVariant.Z3, ZVariant.Z32

REPLACEMENT_TABLE = (
    ReplacementRule(1, _Z3, 2, TAIL, "133213"),
    ReplacementRule(2, _Z3, 2, BEFORE, "133133", "a"),
    ReplacementRule(3, _Z2, 2, BEFORE, "12212332", "a"),
    ReplacementRule(4, _Z3, 1, TAIL, "13131212"),
    ReplacementRule(5, _Z2, 2, BEFORE, "12332133", "b"),
    ReplacementRule(6, _Z3, 2, BEFORE, "12212332", "a"),
    ReplacementRule(7, _Z3, 2, BEFORE, "21323123", "a", max_n=2),
    ReplacementRule(7, _Z32, 3, BEFORE, "1221312213", "a"),
    ReplacementRule(8, _Z3, 2, BEFORE, "12332133", "b"),
    ReplacementRule(9, _Z2, 2, BEFORE, "1221312323", "a"),
    ReplacementRule(10, _Z3, 2, BEFORE, "1221312213", "a", first_not="c"),
    ReplacementRule(11, _Z2, 2, BEFORE, "1233212332", "b"),
    ReplacementRule(12, _Z3, 2, BEFORE, "1221312323", "a"),
    ReplacementRule(13, _Z2, 1, AFTER, "122122", "a"),
    ReplacementRule(14, _Z3, 2, BEFORE, "1233212332", "b"),
    ReplacementRule(16, _Z3, 1, AFTER, "122122", "a"),
    ReplacementRule(17, _Z2, 1, BEFORE, "133133", "a"),
)


def replacement_table() -> Tuple[ReplacementRule, ...]:
    return REPLACEMENT_TABLE


def rule_for(n: int, m: int) -> ReplacementRule:
    for rule in REPLACEMENT_TABLE:
        if rule.residue == m and rule.applies(n):
            return rule
    raise LookupError(f"no replacement row for m={m}, n={n}")


# Short walks not produced by the table machinery, keyed by weight.
SMALL_WALKS = {
    4: "11",
    6: "22",
    8: "33",
    11: "1213",
    12: "1232",
    13: "1323",
    15: "121212",
    16: "122122",
    18: "123123",
    19: "123313",
    20: "133133",
    21: "232323",
    22: "13121213",
    23: "12213132",
    24: "12212332",
    25: "12321323",
    26: "12332133",
    27: "1212122123",
    28: "1221312213",
    29: "1221221323",
    30: "1221312323",
    32: "1233212332",
}


def small_length_walk(l: int) -> Optional[str]:
    """Fixed closed walk of weight ``l`` for ``4 <= l <= 32``; ``None`` at the
    exceptional lengths."""
    if not 4 <= l <= 32:
        raise ValueError(f"small walks cover lengths 4..32, got {l}")
    if l == 31:
        return rule_for(1, 13).build(1)
    return SMALL_WALKS.get(l)


def walk_for_length(l: int) -> str:
    """Closed walk whose codeword is square-free and has length ``l >= 4``."""
    if l in EXCEPTIONAL_LENGTHS:
        raise NotRepresentable(l)
    if l < 4:
        raise ValueError(f"walks give codewords of length at least 4, got {l}")
    if l <= 32:
        return small_length_walk(l)
    n, m = divmod(l, 18)
    if m == 0:
        return build_z(base_word(n), ZVariant.Z3)
    if m == 15:
        return build_z(base_word(n + 1), ZVariant.Z2)
    return rule_for(n, m).build(n)


def _verified(c: BinaryCodeword, l: int) -> BinaryCodeword:
    if len(c) != l or not is_square_free_codeword(c):
        raise ConstructionFault(f"codeword {c} for length {l} failed verification")
    return c


def construct_codeword(l: int) -> BinaryCodeword:
    """Square-free circular codeword of length ``l >= 3``."""
    if l < 3:
        raise ValueError(f"codewords have length at least 3, got {l}")
    if l in EXCEPTIONAL_LENGTHS:
        raise NotRepresentable(l)
    if l == 3:
        return _verified(BinaryCodeword("111", circular=True), l)
    label = walk_for_length(l)
    if not is_closed(label):
        raise ConstructionFault(f"walk ({label}) for length {l} is not closed")
    return _verified(walk_to_codeword(label), l)


def construct_word(l: int) -> CircularWord:
    """Square-free circular word over ``{a,b,c}`` of length ``l``.

    Raises :class:`NotRepresentable` for l in {5, 7, 9, 10, 14, 17}.
    """
    if l < 1:
        raise ValueError(f"length must be positive, got {l}")
    if l in EXCEPTIONAL_LENGTHS:
        raise NotRepresentable(l)
    if l <= 3:
        cw = CircularWord("abc"[:l])
    else:
        cw = decode_circular(construct_codeword(l))
    if cw is None or len(cw) != l or not is_circular_square_free(cw):
        raise ConstructionFault(f"word for length {l} failed verification")
    return cw
