"""Quick randomized invariant checks, runnable from the command line.

These are lighter versions of the test-suite fuzzers, meant as a sanity run
on a fresh install.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, prod
from typing import Callable, NamedTuple

from treespectrum.arithmetic import factorize, sigma0
from treespectrum.constructions import ConstructionParams, build_simple_graph, pad_graph
from treespectrum.continuants import continuant_pair, minus_cf, reconstruct_word
from treespectrum.exact_linalg import det, tridiagonal_matrix, two_copy_identity_sides
from treespectrum.graph_model import cofactor
from treespectrum.random_instances import random_connected_multigraph, random_matrix, random_word
from treespectrum.spectrum_lab import enumerate_words
from treespectrum.tree_count import tau_enumerate, tau_kirchhoff


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _roundtrip(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        w = random_word(rng, max_len=60, max_entry=1000)
        hi, lo = continuant_pair(w)
        if reconstruct_word((hi, lo)) != w or gcd(hi, lo) != 1 or minus_cf(w) != Fraction(hi, lo):
            return f"word {w[:5]}... failed"
        if det(tridiagonal_matrix(w[:12])) != continuant_pair(w[:12]).hi:
            return f"tridiagonal determinant mismatch on {w[:12]}"
    return None


def _two_copy(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        s, t = rng.randint(1, 4), rng.randint(1, 4)
        sides = two_copy_identity_sides(
            random_matrix(rng, s, s), random_matrix(rng, s, t),
            random_matrix(rng, t, s), random_matrix(rng, t, t),
        )
        if sides[0] != sides[1]:
            return f"sides differ: {sides}"
    return None


def _oracle(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        g = random_connected_multigraph(rng, max_vertices=6)
        k = tau_kirchhoff(g).value
        if tau_enumerate(g).value != k:
            return f"enumeration disagrees on {g.edges}"
        if any(det(cofactor(g, v)) != k for v in range(g.n)):
            return f"cofactor depends on vertex for {g.edges}"
    return None


def _sigma0(rng: random.Random, n: int) -> str | None:
    for _ in range(n):
        x = rng.randint(1, 5000)
        if sigma0(x) != sum(1 for d in range(1, x + 1) if x % d == 0):
            return f"sigma0({x}) wrong"
        y = rng.randint(1, 10**12)
        f = factorize(y)
        if prod(p ** e for p, e in f.items()) != y:
            return f"factorize({y}) = {f}"
    return None


def _padding(rng: random.Random, n: int) -> str | None:
    for w in enumerate_words(3, 2):
        g = build_simple_graph(ConstructionParams(3, 2, w))
        t = tau_kirchhoff(g).value
        ell = rng.randint(0, 5)
        if tau_kirchhoff(pad_graph(g, g.n + ell)).value != t:
            return f"padding {w} by {ell} changed tau"
    return None


CHECKS: dict[str, Callable[[random.Random, int], str | None]] = {
    "reconstruction roundtrip": _roundtrip,
    "two-copy determinant identity": _two_copy,
    "kirchhoff vs enumeration": _oracle,
    "sigma0 vs divisor scan": _sigma0,
    "padding preserves tau": _padding,
}


def run_selftest(seed: int = 0, rounds: int = 50) -> list[CheckResult]:
    results = []
    for name, check in CHECKS.items():
        failure = check(random.Random(f"{seed}:{name}"), rounds)
        results.append(CheckResult(name, failure is None, failure or f"{rounds} rounds"))
    return results
