"""Continuants with the minus sign convention, and word reconstruction.

A *word* is a tuple ``(x_1, ..., x_r)`` of integers, each at least 2.  Its
continuants obey ``K_0 = 1``, ``K_1 = x_1`` and
``K_i = x_i * K_{i-1} - K_{i-2}``; the pair ``(K_r, K_{r-1})`` determines the
word uniquely, and :func:`reconstruct_word` recovers it.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Tuple

from gmpy2 import mpq

Word = Tuple[int, ...]


class InvalidWord(ValueError):
    """Raised for an empty word or a word with an entry below 2."""


class NotAContinuantPair(ValueError):
    """Raised when a pair does not come from any word with entries >= 2."""


class ContinuantPair(NamedTuple):
    hi: int  # K_r
    lo: int  # K_{r-1}


def as_word(entries: Iterable[int]) -> Word:
    """Validate ``entries`` and return them as a tuple of ints."""
    word = tuple(entries)
    if not word:
        raise InvalidWord("word must have at least one entry")
    for i, x in enumerate(word):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidWord(f"entry {i} is not an integer: {x!r}")
        if x < 2:
            raise InvalidWord(f"entry {i} is {x}; entries must be >= 2")
    return word


def continuant_sequence(word: Iterable[int]) -> list[int]:
    """Return ``[K_0, K_1, ..., K_r]`` so that index ``i`` holds ``K_i``.

    >>> continuant_sequence([2, 3, 4])
    [1, 2, 5, 18]
    """
    word = as_word(word)
    seq = [1]
    prev = 0  # K_{-1}
    for x in word:
        seq.append(x * seq[-1] - prev)
        prev = seq[-2]
    return seq


def continuant_pair(word: Iterable[int]) -> ContinuantPair:
    seq = continuant_sequence(word)
    return ContinuantPair(seq[-1], seq[-2])


def minus_cf(word: Iterable[int]) -> Fraction:
    """Evaluate ``[x_r, ..., x_1]_-`` directly from its nested definition.

    Deliberately does not go through the continuant recurrence, so that the
    two can be compared.  Every intermediate value is a reduced rational.
    """
    word = as_word(word)
    value = mpq(word[0])
    for x in word[1:]:
        value = x - 1 / value
    return Fraction(int(value.numerator), int(value.denominator))


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def reconstruct_word(pair: tuple[int, int]) -> Word:
    """Invert :func:`continuant_pair`.

    Peels digits ``x = ceil(hi / lo)`` off the top and steps down with
    ``(hi, lo) <- (lo, x * lo - hi)`` until ``lo`` reaches 0.

    >>> reconstruct_word((18, 5))
    (2, 3, 4)
    """
    hi, lo = pair
    if hi < 1 or lo < 0:
        raise NotAContinuantPair(f"({hi}, {lo}): need hi >= 1 and lo >= 0")
    if lo >= hi:
        raise NotAContinuantPair(f"({hi}, {lo}): need lo < hi")
    digits = []
    while lo > 0:
        x = _ceil_div(hi, lo)
        if x < 2:
            raise NotAContinuantPair(f"digit {x} < 2 emitted from ({hi}, {lo})")
        hi, lo = lo, x * lo - hi
        if not 0 <= lo < hi:
            raise NotAContinuantPair(f"monotonicity broken at ({hi}, {lo})")
        digits.append(x)
    if hi != 1:
        raise NotAContinuantPair(f"terminated at ({hi}, 0) instead of (1, 0)")
    if not digits:
        # (1, 0) is the pair of the empty word, which is not a valid Word
        raise NotAContinuantPair("(1, 0) corresponds to the empty word")
    return tuple(reversed(digits))
