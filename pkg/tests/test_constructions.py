import itertools

import pytest

from treespectrum.constructions import (
    ConstructionError,
    ConstructionParams,
    build_multigraph,
    build_simple_graph,
    extract_blocks,
    pad_graph,
    path_degree,
)
from treespectrum.continuants import InvalidWord, continuant_pair
from treespectrum.exact_linalg import det, tridiagonal_matrix
from treespectrum.graph_model import ROOT, Role, cofactor, is_connected, is_simple


def root_mults(graph, kind, count):
    return [graph.multiplicity(0, graph.index_of(Role(kind, i))) for i in range(1, count + 1)]


@pytest.mark.parametrize("i, r, d", [(1, 3, 1), (2, 3, 2), (3, 3, 1), (1, 1, 0)])
def test_path_degree(i, r, d):
    assert path_degree(i, r) == d


@pytest.mark.parametrize("i, r", [(0, 3), (4, 3), (1, 0)])
def test_path_degree_range(i, r):
    with pytest.raises(ValueError):
        path_degree(i, r)


@pytest.mark.parametrize("word, h, h_prime", [
    ((2, 2, 2), [1, 0, 1], [1, 1]),
    ((2, 3, 2), [1, 1, 1], [1, 2]),
])
def test_multigraph_root_multiplicities(word, h, h_prime):
    g = build_multigraph(word)
    assert g.n == 6
    assert root_mults(g, "u", 3) == h
    assert root_mults(g, "u_prime", 2) == h_prime
    assert is_connected(g)


def test_multigraph_vertex_order():
    g = build_multigraph((2, 3, 4, 5))
    assert [r.tag for r in g.vertices] == ["rho", "u:1", "u:2", "u:3", "u:4", "u':1", "u':2", "u':3"]


def test_multigraph_uncapped_entries():
    g = build_multigraph((9, 2, 17))
    assert det(cofactor(g, 0)) == continuant_pair((9, 2, 17)).hi * continuant_pair((9, 2)).hi


@pytest.mark.parametrize("word, exc", [((2, 2), ConstructionError), ((2, 1, 2), InvalidWord)])
def test_multigraph_rejects(word, exc):
    with pytest.raises(exc):
        build_multigraph(word)


def test_multigraph_identity_sweep():
    for m in (3, 4, 5):
        for word in itertools.product(range(2, 6), repeat=m):
            K_m, K_m1 = continuant_pair(word)
            assert det(cofactor(build_multigraph(word), 0)) == K_m * K_m1


def test_simple_graph_example_sizes():
    g = build_simple_graph(ConstructionParams(3, 1, (2, 2, 2)))
    assert g.n == 12 and is_simple(g) and is_connected(g)
    g = build_simple_graph(ConstructionParams(3, 2, (2, 3, 2)))
    assert g.n == 13
    a1, a2 = g.index_of(Role("anchor", 1)), g.index_of(Role("anchor", 2))
    for kind in ("u", "v"):
        x = g.index_of(Role(kind, 2))
        assert g.multiplicity(x, a1) == 1 and g.multiplicity(x, a2) == 0


def test_simple_graph_rejects_alphabet_overflow():
    with pytest.raises(ConstructionError):
        ConstructionParams(3, 1, (2, 3, 2))


@pytest.mark.parametrize("m, q, word", [(2, 1, (2, 2)), (3, 0, (2, 2, 2)), (4, 1, (2, 2, 2))])
def test_params_validation(m, q, word):
    with pytest.raises(ConstructionError):
        ConstructionParams(m, q, word)


def _swap_uv(role):
    swap = {"u": "v", "v": "u", "u_prime": "v_prime", "v_prime": "u_prime"}
    return Role(swap.get(role.kind, role.kind), role.index)


def test_simple_graph_sweep():
    for m in range(3, 6):
        for q in range(1, 5):
            for word in itertools.product(range(2, q + 2), repeat=m):
                params = ConstructionParams(m, q, word)
                g = build_simple_graph(params)
                assert g.n == 4 * m + q - 1
                assert is_simple(g) and is_connected(g)
                # twin-copy swap is an automorphism fixing rho and the anchors
                relabel = {i: g.index_of(_swap_uv(r)) for i, r in enumerate(g.vertices)}
                swapped = {tuple(sorted((relabel[u], relabel[v]))) for (u, v), _ in g.edges}
                assert swapped == {e for e, _ in g.edges}
                # path endpoints reach the anchor star
                for kind, length in (("u", m), ("v", m), ("u_prime", m - 1), ("v_prime", m - 1)):
                    for end in (1, length):
                        x = g.index_of(Role(kind, end))
                        assert g.multiplicity(x, g.index_of(Role("anchor", 1))) == 1


def test_simple_graph_vertex_order():
    g = build_simple_graph(ConstructionParams(3, 2, (2, 2, 3)))
    assert [r.tag for r in g.vertices] == [
        "rho", "u:1", "u:2", "u:3", "v:1", "v:2", "v:3",
        "u':1", "u':2", "v':1", "v':2", "a:1", "a:2",
    ]


def test_pad_graph():
    params = ConstructionParams(3, 1, (2, 2, 2))
    g = build_simple_graph(params)
    assert pad_graph(g, g.n) == g
    padded = pad_graph(g, 15)
    assert padded.n == 15
    a1 = padded.index_of(Role("anchor", 1))
    for j in (1, 2, 3):
        z = padded.index_of(Role("pad", j))
        assert padded.neighbours(z) == [a1]
    with pytest.raises(ConstructionError):
        pad_graph(g, g.n - 1)


def test_extract_blocks_example():
    b = extract_blocks(ConstructionParams(3, 1, (2, 2, 2)))
    assert b.A == tridiagonal_matrix((2, 2, 2))
    assert b.B == tridiagonal_matrix((2, 2))
    # one -1 per path-to-anchor edge, so rows sum to -h
    assert [sum(b.P.row(i)) for i in range(3)] == [-1, 0, -1]
    assert [sum(b.Q.row(i)) for i in range(2)] == [-1, -1]
    assert b.R.shape == (2 * 3 - 1 + 1,) * 2


def test_extract_blocks_matches_graph_cofactor():
    params = ConstructionParams(4, 3, (2, 4, 3, 2))
    b = extract_blocks(params)
    g = build_simple_graph(params)
    assert b.M == cofactor(g, g.index_of(ROOT))
    # F is the anchor block: degree of each anchor on the diagonal
    for t in range(params.q):
        anchor = g.index_of(Role("anchor", t + 1))
        assert b.F[t, t] == len(g.neighbours(anchor))


def test_det_factorization_small_sweep():
    for q in (1, 2, 3):
        for word in itertools.product(range(2, q + 2), repeat=4):
            b = extract_blocks(ConstructionParams(4, q, word))
            assert det(b.M) == det(b.A) * det(b.B) * det(b.R)
