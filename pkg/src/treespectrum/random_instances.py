"""Seeded generators for fuzzing: words, multigraphs, integer block matrices."""

from __future__ import annotations

import random

from treespectrum.exact_linalg import IntMatrix
from treespectrum.graph_model import MultiGraph, is_connected


def random_word(rng: random.Random, max_len: int = 200, max_entry: int = 10**6) -> tuple[int, ...]:
    r = rng.randint(1, max_len)
    return tuple(rng.randint(2, max_entry) for _ in range(r))


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    return IntMatrix(rows, cols, tuple(rng.randint(lo, hi) for _ in range(rows * cols)))


def random_multigraph(
    rng: random.Random,
    n: int,
    edge_prob: float = 0.5,
    max_mult: int = 3,
) -> MultiGraph:
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges[(u, v)] = rng.randint(1, max_mult)
    return MultiGraph.from_edges(n, edges)


def random_connected_multigraph(
    rng: random.Random,
    max_vertices: int = 8,
    edge_prob: float = 0.4,
    max_mult: int = 3,
) -> MultiGraph:
    """A random spanning tree (so the result is connected) plus random extra edges."""
    n = rng.randint(2, max_vertices)
    order = list(range(n))
    rng.shuffle(order)
    edges: dict[tuple[int, int], int] = {}
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges[(min(a, b), max(a, b))] = rng.randint(1, max_mult)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges[(u, v)] = rng.randint(1, max_mult)
    return MultiGraph.from_edges(n, edges)


def random_disconnected_multigraph(
    rng: random.Random,
    max_vertices: int = 8,
    max_mult: int = 3,
) -> MultiGraph:
    """Two random pieces with no edge between them."""
    n = rng.randint(2, max_vertices)
    split = rng.randint(1, n - 1)
    g = random_multigraph(rng, n, edge_prob=0.6, max_mult=max_mult)
    edges = {e: m for e, m in g.edges if (e[0] < split) == (e[1] < split)}
    graph = MultiGraph.from_edges(n, edges)
    assert not is_connected(graph)
    return graph
