from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treespectrum.continuants import (
    InvalidWord,
    NotAContinuantPair,
    continuant_pair,
    continuant_sequence,
    minus_cf,
    reconstruct_word,
)

words = st.lists(st.integers(min_value=2, max_value=10**6), min_size=1, max_size=60)
small_words = st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=12)


@pytest.mark.parametrize("word, expected", [
    ([3], [1, 3]),
    ([2, 2, 2], [1, 2, 3, 4]),
    ([2, 3, 4], [1, 2, 5, 18]),
])
def test_sequence_examples(word, expected):
    assert continuant_sequence(word) == expected


@pytest.mark.parametrize("word, pair", [
    ([2], (2, 1)),
    ([2, 2, 2], (4, 3)),
    ([2, 3, 4], (18, 5)),
])
def test_pair_examples(word, pair):
    assert continuant_pair(word) == pair


@pytest.mark.parametrize("word, value", [
    ([2], Fraction(2)),
    ([2, 3], Fraction(5, 2)),
    ([2, 3, 4], Fraction(18, 5)),
])
def test_minus_cf_examples(word, value):
    assert minus_cf(word) == value


@pytest.mark.parametrize("pair, word", [((18, 5), (2, 3, 4)), ((4, 3), (2, 2, 2))])
def test_reconstruct_examples(pair, word):
    assert reconstruct_word(pair) == word


@pytest.mark.parametrize("pair", [(4, 2), (5, 5), (3, 7), (0, 0), (7, -1), (1, 0), (6, 4)])
def test_reconstruct_rejects(pair):
    with pytest.raises(NotAContinuantPair):
        reconstruct_word(pair)


@pytest.mark.parametrize("bad", [[], [1], [2, 1, 3], [0, 5], [2, 2.5], [True, 3]])
def test_invalid_words(bad):
    with pytest.raises(InvalidWord):
        continuant_sequence(bad)
    with pytest.raises(InvalidWord):
        minus_cf(bad)


def _det_by_expansion(word):
    # K_r via Laplace expansion along the last row of the tridiagonal matrix,
    # written recursively from scratch
    if not word:
        return 1
    if len(word) == 1:
        return word[0]
    return word[-1] * _det_by_expansion(word[:-1]) - _det_by_expansion(word[:-2])


@given(words)
def test_monotone_and_product_bound(word):
    seq = continuant_sequence(word)
    assert all(0 <= a < b for a, b in zip(seq, seq[1:]))
    assert 1 <= seq[-1] <= prod(word)


@given(words)
def test_roundtrip_coprime_and_cf(word):
    hi, lo = continuant_pair(word)
    assert reconstruct_word((hi, lo)) == tuple(word)
    assert gcd(hi, lo) == 1
    assert minus_cf(word) == Fraction(hi, lo)


@settings(max_examples=50)
@given(small_words)
def test_sequence_matches_expansion(word):
    assert continuant_sequence(word)[-1] == _det_by_expansion(word)


@given(st.integers(1, 500), st.integers(0, 500))
def test_reconstruct_accepts_exactly_the_image(hi, lo):
    """Brute force over small pairs: a pair reconstructs iff some word maps to it."""
    try:
        word = reconstruct_word((hi, lo))
    except NotAContinuantPair:
        # genuine pairs satisfy 0 <= lo < hi and gcd 1; every such pair with
        # lo >= 1 is a genuine pair, so rejection must mean one of these fails
        assert lo == 0 or lo >= hi or gcd(hi, lo) != 1
    else:
        assert continuant_pair(word) == (hi, lo)
