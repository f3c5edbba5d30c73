"""Exit criteria.  Each test records a one-line PASS/FAIL summary, printed at
the end of the pytest run under "acceptance criteria"."""

import itertools
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from treespectrum.arithmetic import sigma0
from treespectrum.constructions import (
    ConstructionParams,
    build_multigraph,
    build_simple_graph,
    extract_blocks,
    pad_graph,
)
from treespectrum.continuants import continuant_pair, minus_cf, reconstruct_word
from treespectrum.exact_linalg import det, two_copy_identity_sides
from treespectrum.graph_model import cofactor
from treespectrum.random_instances import random_connected_multigraph, random_matrix, random_word
from treespectrum.spectrum_lab import enumerate_words, run_spectrum
from treespectrum.tree_count import tau_enumerate, tau_kirchhoff


@pytest.fixture
def criterion(record_property):
    def mark(name, detail=""):
        record_property("criterion", name)
        record_property("detail", detail)
    return mark


def _elapsed(start):
    return time.perf_counter() - start


def test_ac1_multigraph_identity(criterion):
    criterion("AC1 multigraph identity tau(H_w) = K_m K_{m-1}")
    start = time.perf_counter()
    instances = enumerated = 0
    for m in (3, 4, 5):
        for word in itertools.product((2, 3, 4), repeat=m):
            g = build_multigraph(word)
            K_m, K_m1 = continuant_pair(word)
            tau = tau_kirchhoff(g).value
            assert tau == K_m * K_m1, word
            if m == 3:
                assert tau_enumerate(g).value == tau, word
                enumerated += 1
            instances += 1
    took = _elapsed(start)
    criterion("AC1 multigraph identity tau(H_w) = K_m K_{m-1}",
              f"{instances} words, {enumerated} enumerated, {took:.2f}s")
    assert instances == 27 + 81 + 243 and enumerated == 27
    assert took < 10


def test_ac2_divisibility_and_factorization(criterion):
    name = "AC2 D_w | tau(G_w) and det M = det A det B det R"
    start = time.perf_counter()
    count = 0
    for q in (1, 2, 3):
        for word in enumerate_words(3, q):
            params = ConstructionParams(3, q, word)
            g = build_simple_graph(params)
            assert g.n == 11 + q
            tau = tau_kirchhoff(g).value
            K_m, K_m1 = continuant_pair(word)
            assert tau % (K_m * K_m1) == 0, word
            b = extract_blocks(params)
            assert det(b.M) == tau == det(b.A) * det(b.B) * det(b.R), word
            count += 1
    took = _elapsed(start)
    criterion(name, f"{count} graphs, {took:.2f}s")
    assert count == 1 + 8 + 27
    assert took < 5


def test_ac3_oracle_equivalence(criterion):
    name = "AC3 Kirchhoff = enumeration, cofactor vertex invariance"
    start = time.perf_counter()
    rng = random.Random(31337)
    corpus = [
        random_connected_multigraph(rng, max_vertices=8, edge_prob=rng.uniform(0.1, 0.6), max_mult=3)
        for _ in range(200)
    ]
    corpus += [build_simple_graph(ConstructionParams(3, 1, w)) for w in enumerate_words(3, 1)]
    for g in corpus:
        k = tau_kirchhoff(g).value
        assert tau_enumerate(g).value == k, g
        assert all(det(cofactor(g, v)) == k for v in range(g.n)), g
    took = _elapsed(start)
    criterion(name, f"{len(corpus)} graphs (max {max(g.n for g in corpus)} vertices), {took:.2f}s")
    assert max(g.n for g in corpus[:200]) <= 8
    assert all(m <= 3 for g in corpus for _, m in g.edges)
    assert took < 60


def test_ac4_reconstruction_roundtrip(criterion):
    name = "AC4 reconstruction roundtrip, coprimality, minus-CF consistency"
    start = time.perf_counter()
    rng = random.Random(4)
    longest = 0
    for _ in range(10**4):
        w = random_word(rng, max_len=200, max_entry=10**6)
        hi, lo = continuant_pair(w)
        assert reconstruct_word((hi, lo)) == w
        assert gcd(hi, lo) == 1
        assert minus_cf(w) == Fraction(hi, lo)
        longest = max(longest, len(w))
    took = _elapsed(start)
    criterion(name, f"10000 words (longest {longest}), {took:.2f}s")
    assert took < 10


def test_ac5_two_copy_identity(criterion):
    name = "AC5 two-copy block determinant identity"
    start = time.perf_counter()
    rng = random.Random(5)
    for _ in range(1000):
        s, t = rng.randint(1, 6), rng.randint(1, 6)
        lhs, rhs = two_copy_identity_sides(
            random_matrix(rng, s, s, -9, 9), random_matrix(rng, s, t, -9, 9),
            random_matrix(rng, t, s, -9, 9), random_matrix(rng, t, t, -9, 9),
        )
        assert lhs == rhs
    took = _elapsed(start)
    criterion(name, f"1000 instances, {took:.2f}s")
    assert took < 5


def test_ac6_padding(criterion):
    name = "AC6 padding preserves tau"
    start = time.perf_counter()
    checks = 0
    for q in (1, 2, 3):
        for word in enumerate_words(3, q):
            g = build_simple_graph(ConstructionParams(3, q, word))
            tau = tau_kirchhoff(g).value
            for ell in range(11):
                assert tau_kirchhoff(pad_graph(g, g.n + ell)).value == tau
                checks += 1
    took = _elapsed(start)
    criterion(name, f"{checks} padded graphs, {took:.2f}s")
    assert took < 10


def test_ac7_spectrum_report(criterion):
    name = "AC7 run_spectrum(3,2) report and sigma0 cross-check"
    start = time.perf_counter()
    report = run_spectrum(3, 2)
    assert report.total_words == 8
    assert report.distinct_pairs == 8
    assert report.distinct_divisors == 8
    assert set(report.divisors) == {12, 21, 35, 40, 60, 65, 104, 168}
    fibers = {}
    for r in report.records:
        fibers[r.D_w] = fibers.get(r.D_w, 0) + 1
    assert all(size <= sigma0(D) for D, size in fibers.items())
    assert report.sigma0_bound_satisfied

    bound = 10**5
    scan = [0] * (bound + 1)
    for d in range(1, bound + 1):
        for k in range(d, bound + 1, d):
            scan[k] += 1
    assert all(sigma0(n) == scan[n] for n in range(1, bound + 1))
    took = _elapsed(start)
    criterion(name, f"divisors {report.divisors}, sigma0 checked to 1e5, {took:.2f}s")
    assert took < 5


def test_ac8_scale_probe(criterion):
    name = "AC8 run_spectrum(6,3) scale probe"
    start = time.perf_counter()
    report = run_spectrum(6, 3)
    took = _elapsed(start)
    criterion(name, f"{report.total_words} words, N = 26, {report.distinct_tree_counts} distinct tau, "
                    f"{took:.1f}s")
    assert report.total_words == 729
    assert all(r.n_vertices == 26 for r in report.records)
    assert all(r.ok for r in report.records)
    assert all(r.flags[k] for r in report.records for k in
               ("multigraph_identity", "divisibility", "factorization", "block_zero_pattern"))
    assert report.all_verified
    assert took < 120
