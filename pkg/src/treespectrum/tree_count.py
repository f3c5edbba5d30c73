"""Spanning-tree counts: Kirchhoff cofactor determinant and brute-force enumeration.

The enumerator never touches a matrix, which is what makes it useful as an
oracle for the determinant path.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from treespectrum.exact_linalg import det
from treespectrum.graph_model import MultiGraph, cofactor, is_connected

DEFAULT_ENUMERATION_BUDGET = 5_000_000


class EnumerationBudgetExceeded(RuntimeError):
    pass


class TreeCount(NamedTuple):
    value: int
    method: str  # "kirchhoff" or "enumeration"


def tau_kirchhoff(graph: MultiGraph, vertex: int = 0) -> TreeCount:
    """Determinant of the Laplacian cofactor at ``vertex``.

    A single vertex has one (empty) spanning tree.
    """
    if graph.n == 0:
        raise ValueError("the empty graph has no spanning trees to count")
    if graph.n == 1:
        return TreeCount(1, "kirchhoff")
    return TreeCount(det(cofactor(graph, vertex)), "kirchhoff")


def enumeration_cost(graph: MultiGraph) -> int:
    """Number of (n-1)-subsets of distinct vertex pairs the enumerator may visit."""
    return comb(len(graph.edges), graph.n - 1)


class _RollbackUnionFind:
    # union by size, no path compression, so unions can be undone in LIFO order
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, ra: int, rb: int) -> int:
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return rb

    def undo(self, rb: int) -> None:
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def tau_enumerate(graph: MultiGraph, budget: int = DEFAULT_ENUMERATION_BUDGET) -> TreeCount:
    """Count spanning trees by walking all acyclic edge subsets of size n - 1.

    Parallel edges are distinct objects: a subset of vertex pairs that forms a
    tree contributes the product of its multiplicities.  The search branches
    on include/exclude per vertex pair and abandons a branch as soon as it
    closes a cycle or can no longer reach n - 1 edges.
    """
    n = graph.n
    if n == 0:
        raise ValueError("the empty graph has no spanning trees to count")
    if n == 1:
        return TreeCount(1, "enumeration")
    cost = enumeration_cost(graph)
    if cost > budget:
        raise EnumerationBudgetExceeded(
            f"C({len(graph.edges)}, {n - 1}) = {cost} subsets exceeds budget {budget}"
        )
    if not is_connected(graph):
        return TreeCount(0, "enumeration")

    edges = [(u, v, m) for (u, v), m in graph.edges]
    n_edges = len(edges)
    need = n - 1
    uf = _RollbackUnionFind(n)
    total = 0

    def walk(k: int, chosen: int, weight: int) -> None:
        nonlocal total
        if chosen == need:
            total += weight
            return
        if n_edges - k < need - chosen:
            return
        u, v, m = edges[k]
        ru, rv = uf.find(u), uf.find(v)
        if ru != rv:
            child = uf.union(ru, rv)
            walk(k + 1, chosen + 1, weight * m)
            uf.undo(child)
        walk(k + 1, chosen, weight)

    walk(0, 0, 1)
    return TreeCount(total, "enumeration")
