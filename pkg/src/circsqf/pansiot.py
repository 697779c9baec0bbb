"""Pansiot's binary encoding of ternary words.

Bit ``i`` of a codeword records whether the letter two places further on
repeats letter ``i`` (``0``) or not (``1``). A linear word of length ``l``
encodes to ``l - 2`` bits; a circular word of length ``l`` to a circular
codeword of length ``l``. Both directions are only defined up to a letter
bijection; decoding pins the representative with a two-letter seed.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from .words import ALPHABET, CircularWord, check_word, is_circular_square_free, least_rotation


@dataclass(frozen=True)
class BinaryCodeword:
    """Bits over ``{0,1}``; circular codewords are kept in least rotation,
    which starts with ``0`` whenever a ``0`` is present."""

    bits: str
    circular: bool = False

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"not a binary string: {self.bits!r}")
        if self.circular:
            if not self.bits:
                raise ValueError("circular codewords are nonempty")
            object.__setattr__(self, "bits", least_rotation(self.bits))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return f"({self.bits})" if self.circular else self.bits

    @classmethod
    def parse(cls, text: str) -> "BinaryCodeword":
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            return cls(text[1:-1], circular=True)
        return cls(text)


class ForbiddenFactor(NamedTuple):
    pattern: str
    source_period: int


# Codeword factors signalling a minimal square of short period in a circular
# word, in scan order.
FORBIDDEN_FACTORS = (
    ForbiddenFactor("00", 2),
    ForbiddenFactor("1111", 3),
    ForbiddenFactor("01010", 4),
    ForbiddenFactor("011011011", 6),
    ForbiddenFactor("110110110", 6),
    ForbiddenFactor("11101110111", 8),
)


def _third(x: str, y: str) -> str:
    (z,) = set(ALPHABET) - {x, y}
    return z


def _bits(s: str) -> str:
    n = len(s)
    return "".join("0" if s[(i + 2) % n] == s[i] else "1" for i in range(n))


def encode_linear(w: str) -> BinaryCodeword:
    check_word(w)
    if len(w) < 3:
        raise ValueError("encoding needs a word of length at least 3")
    if any(x == y for x, y in zip(w, w[1:])):
        raise ValueError(f"{w!r} contains the square of a letter")
    return BinaryCodeword("".join("0" if w[i + 2] == w[i] else "1" for i in range(len(w) - 2)))


def decode_linear(c: BinaryCodeword, seed: Tuple[str, str] = ("a", "b")) -> str:
    if c.circular:
        raise ValueError("decode_linear expects a linear codeword")
    x, y = seed
    check_word(x + y)
    if len(x) != 1 or len(y) != 1 or x == y:
        raise ValueError(f"seed must be two distinct letters, got {seed!r}")
    out = [x, y]
    for bit in c.bits:
        out.append(out[-2] if bit == "0" else _third(out[-2], out[-1]))
    return "".join(out)


def encode_circular(cw: CircularWord) -> BinaryCodeword:
    s = cw.letters
    n = len(s)
    if n < 3:
        raise ValueError("encoding needs a circular word of length at least 3")
    if any(s[i] == s[(i + 1) % n] for i in range(n)):
        raise ValueError(f"{cw} contains the square of a letter")
    return BinaryCodeword(_bits(s), circular=True)


def decode_circular(c: BinaryCodeword) -> Optional[CircularWord]:
    """Decode from seed ``(a, b)``; ``None`` when the bits do not close up
    into a circular word free of letter squares."""
    if not c.circular:
        raise ValueError("decode_circular expects a circular codeword")
    n = len(c)
    if n < 3:
        raise ValueError("circular codewords shorter than 3 do not decode")
    s = decode_linear(BinaryCodeword(c.bits[: n - 2]))
    if any(s[i] == s[(i + 1) % n] for i in range(n)):
        return None
    if _bits(s) != c.bits:
        return None
    return CircularWord(s)


def _cyclic_contains(bits: str, pattern: str) -> bool:
    if len(pattern) > len(bits):
        return False
    return pattern in bits + bits[: len(pattern) - 1]


def circular_factor_scan(c: BinaryCodeword) -> Optional[ForbiddenFactor]:
    """First catalogue pattern read cyclically in ``c`` (factors no longer
    than ``c`` itself), or ``None``."""
    if not c.circular:
        raise ValueError("circular_factor_scan expects a circular codeword")
    for factor in FORBIDDEN_FACTORS:
        if _cyclic_contains(c.bits, factor.pattern):
            return factor
    return None


def is_square_free_codeword(c: BinaryCodeword) -> bool:
    if not c.circular:
        raise ValueError("is_square_free_codeword expects a circular codeword")
    if len(c) < 3:
        return False
    cw = decode_circular(c)
    return cw is not None and is_circular_square_free(cw)
