"""
Counting distinct tree counts over a word family
================================================

Run every word of {2, ..., q+1}^m through the checks, then look at how many
distinct divisors D_w and tree counts appear, and how the divisor fibers
compare with sigma_0.
"""

from fractions import Fraction

from treespectrum import lower_bound_estimate, run_spectrum

for m, q in [(3, 2), (4, 3), (5, 3), (6, 3)]:
    report = run_spectrum(m, q)
    print(
        f"m={m} q={q}: {report.total_words} words, {report.distinct_pairs} pairs, "
        f"{report.distinct_divisors} divisors, {report.distinct_tree_counts} tree counts, "
        f"fibers {report.divisor_fiber_histogram}, verified={report.all_verified}"
    )

##############################################################################
# Words sharing a divisor value
# -----------------------------
# Distinct continuant pairs can multiply to the same D.

report = run_spectrum(6, 3)
by_divisor = {}
for rec in report.records:
    by_divisor.setdefault(rec.D_w, []).append(rec)
for D, recs in by_divisor.items():
    if len(recs) > 1:
        print(D, [(r.word, (r.K_m, r.K_m_minus_1)) for r in recs])

##############################################################################
# The asymptotic lower bound is vacuous at this scale

for eta in (Fraction(1, 100), Fraction(1, 10), Fraction(1, 2)):
    print(f"eta={eta}: bound ~ {float(lower_bound_estimate(6, 3, eta)):.3g}")
