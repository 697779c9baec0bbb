"""Square-free circular words over a three-letter alphabet.

Builds a square-free circular ternary word of every length except 5, 7, 9,
10, 14 and 17, verifies it independently, and cross-checks everything against
exhaustive enumeration.
"""

__version__ = "0.1.0"

from ._accel import BACKEND
from .construct import NotRepresentable, construct_codeword, construct_word
from .words import CircularWord, is_circular_square_free, is_square_free

__all__ = [
    "BACKEND",
    "CircularWord",
    "NotRepresentable",
    "construct_codeword",
    "construct_word",
    "is_circular_square_free",
    "is_square_free",
]
