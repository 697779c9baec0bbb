"""Ternary words and circular words over ``{a, b, c}``.

Linear words are plain ``str`` values. Circular words are :class:`CircularWord`
instances that always store their lexicographically least rotation, so two
circular words compare equal exactly when they are conjugate.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, NamedTuple, Optional, Tuple

from ._accel import kernels

ALPHABET = "abc"

# The six letter bijections, in a fixed order (identity first).
BIJECTIONS = tuple(
    str.maketrans(ALPHABET, "".join(image)) for image in permutations(ALPHABET)
)


def check_word(w: str) -> str:
    if not isinstance(w, str):
        raise TypeError(f"expected str, got {type(w).__name__}")
    bad = set(w) - set(ALPHABET)
    if bad:
        raise ValueError(f"letters outside {{a,b,c}}: {''.join(sorted(bad))}")
    return w


def least_rotation(s: str) -> str:
    """Lexicographically least rotation of ``s`` (Booth's algorithm)."""
    n = len(s)
    if n < 2:
        return s
    d = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = d[j]
        i = f[j - k - 1]
        while i != -1 and c != d[k + i + 1]:
            if c < d[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and c != d[k]:
            if c < d[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return d[k:k + n]


@dataclass(frozen=True, order=True)
class CircularWord:
    """A nonempty cyclic sequence of letters, stored as its least rotation."""

    letters: str

    def __post_init__(self):
        check_word(self.letters)
        if not self.letters:
            raise ValueError("circular words are nonempty")
        object.__setattr__(self, "letters", least_rotation(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return f"({self.letters})"

    @classmethod
    def parse(cls, text: str) -> "CircularWord":
        """Parse ``"(abac)"``; the parentheses are optional."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        return cls(text)


class PeriodData(NamedTuple):
    min_period: int
    exponent: Fraction


def find_square(w: str) -> Optional[Tuple[int, int]]:
    """Locate a square factor ``xx`` of ``w``.

    Returns ``(start, period)`` with a 1-based start position and
    ``period == |x|``, choosing the smallest start and then the smallest
    period; ``None`` if ``w`` is square-free.
    """
    hit = kernels.find_square(check_word(w).encode("ascii"))
    if hit is None:
        return None
    return hit[0] + 1, hit[1]


def is_square_free(w: str) -> bool:
    return find_square(w) is None


def is_minimal_square(w: str) -> bool:
    """True iff ``w = uu`` with ``u`` nonempty and no proper factor a square."""
    n = len(check_word(w))
    if n == 0 or n % 2:
        return False
    half = n // 2
    if w[:half] != w[half:]:
        return False
    # every proper factor lies inside w[:-1] or w[1:]
    return is_square_free(w[:-1]) and is_square_free(w[1:])


def period_data(w: str) -> PeriodData:
    check_word(w)
    if not w:
        raise ValueError("period of the empty word is undefined")
    n = len(w)
    for p in range(1, n + 1):
        if w[p:] == w[:n - p]:
            return PeriodData(p, Fraction(n, p))
    raise AssertionError("unreachable")


def conjugates(cw: CircularWord) -> list:
    """Distinct rotations of ``cw``, starting from the stored representative."""
    s = cw.letters
    seen = dict.fromkeys(s[i:] + s[:i] for i in range(len(s)))
    return list(seen)


def find_circular_square(cw: CircularWord) -> Optional[Tuple[int, int]]:
    """Square witness in ``cw`` as ``(start, period)``, start 1-based on the
    stored representative read cyclically."""
    hit = kernels.find_circular_square(cw.letters.encode("ascii"))
    if hit is None:
        return None
    return hit[0] + 1, hit[1]


def is_circular_square_free(cw: CircularWord) -> bool:
    return find_circular_square(cw) is None


def relabel(w: str, bijection) -> str:
    return w.translate(bijection)


def canonical_iso_form(cw: CircularWord) -> CircularWord:
    """Least representative over all letter bijections and rotations."""
    return min(CircularWord(relabel(cw.letters, b)) for b in BIJECTIONS)


def are_isomorphic(cw1: CircularWord, cw2: CircularWord) -> bool:
    if len(cw1) != len(cw2):
        return False
    return any(CircularWord(relabel(cw1.letters, b)) == cw2 for b in BIJECTIONS)


def iter_square_free(n: int, alphabet: str = ALPHABET) -> Iterator[str]:
    """Lazily yield the square-free words of length ``n`` in lexicographic order.

    Depth-first over square-free prefixes, testing only squares that end at the
    newly appended letter.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        yield ""
        return
    suffix_square = kernels.has_square_suffix
    letters = sorted(alphabet)
    buf = bytearray()
    stack = [0]
    while stack:
        i = stack[-1]
        if i == len(letters):
            stack.pop()
            if buf:
                buf.pop()
            if stack:
                stack[-1] += 1
            continue
        if len(buf) == len(stack):
            buf[-1] = ord(letters[i])
        else:
            buf.append(ord(letters[i]))
        if suffix_square(bytes(buf)):
            stack[-1] += 1
            continue
        if len(buf) == n:
            yield buf.decode("ascii")
            stack[-1] += 1
            continue
        stack.append(0)
