"""
Continuants and word reconstruction
===================================

A word is a tuple of integers, each at least 2.  Its continuants grow
strictly, and the last two of them pin the word down completely.
"""

from math import prod

from treespectrum import continuant_pair, continuant_sequence, minus_cf, reconstruct_word
from treespectrum import det, tridiagonal_matrix

word = (2, 3, 4)
print("continuants of", word, "->", continuant_sequence(word))

# The last continuant is the determinant of the tridiagonal matrix with the
# word on the diagonal and -1 beside it.
T = tridiagonal_matrix(word)
print(T.tolist(), "det =", det(T))

# The ratio of the last two continuants is the minus continued fraction
# 4 - 1/(3 - 1/2).
print("minus continued fraction:", minus_cf(word))

##############################################################################
# Going backwards
# ---------------
# Peel off ceil(hi / lo) until the pair reaches (1, 0).

pair = continuant_pair(word)
print(pair, "->", reconstruct_word(pair))

long_word = (7, 2, 2, 19, 5, 3, 1000, 2, 2, 2, 44)
hi, lo = continuant_pair(long_word)
print(f"K_r has {len(str(hi))} digits; product bound {prod(long_word)}")
assert reconstruct_word((hi, lo)) == long_word

# Not every pair comes from a word.
try:
    reconstruct_word((4, 2))
except ValueError as exc:
    print("rejected (4, 2):", exc)
