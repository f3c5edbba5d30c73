"""The two graph families indexed by words, padding, and the cofactor blocks.

``build_multigraph`` gives the root-and-two-paths multigraph whose tree count
is exactly ``K_m * K_{m-1}``.  ``build_simple_graph`` replaces parallel root
edges by an anchor star and doubles both paths; its tree count is divisible by
the same product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from treespectrum.continuants import Word, as_word
from treespectrum.exact_linalg import IntMatrix, block, tridiagonal_matrix
from treespectrum.graph_model import MultiGraph, Role, ROOT, cofactor


class ConstructionError(ValueError):
    """Parameters outside the range where a construction is defined."""


class InconsistentBlocks(RuntimeError):
    """The cofactor does not have the expected block shape (a construction bug)."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InconsistentBlocks(msg)


@dataclass(frozen=True)
class ConstructionParams:
    m: int
    q: int
    word: Word

    def __post_init__(self):
        if self.m < 3:
            raise ConstructionError(f"m = {self.m}; constructions need m >= 3")
        if self.q < 1:
            raise ConstructionError(f"q = {self.q}; need q >= 1")
        word = as_word(self.word)
        object.__setattr__(self, "word", word)
        if len(word) != self.m:
            raise ConstructionError(f"word has length {len(word)}, expected m = {self.m}")
        for i, w in enumerate(word, 1):
            if w > self.q + 1:
                raise ConstructionError(
                    f"w_{i} = {w} exceeds q + 1 = {self.q + 1}; anchors a_1..a_{w - 1} "
                    "would not all exist"
                )

    @property
    def n_vertices(self) -> int:
        return 4 * self.m + self.q - 1

    @classmethod
    def for_word(cls, word: Iterable[int], q: int) -> "ConstructionParams":
        word = tuple(word)
        return cls(len(word), q, word)


@dataclass(frozen=True)
class CofactorBlocks:
    A: IntMatrix  # m x m, tridiagonal of w_1..w_m
    B: IntMatrix  # (m-1) x (m-1), tridiagonal of w_1..w_{m-1}
    P: IntMatrix  # m x q, path-u rows against anchors
    Q: IntMatrix  # (m-1) x q, path-u' rows against anchors
    F: IntMatrix  # q x q, anchor block
    R: IntMatrix  # [[B, 0, Q], [0, A, P], [2Q^T, 2P^T, F]]
    M: IntMatrix  # the full cofactor at the root


def path_degree(i: int, r: int) -> int:
    """Degree of vertex ``i`` in the path ``1 - 2 - ... - r``."""
    if r < 1 or not 1 <= i <= r:
        raise ValueError(f"vertex {i} not on a path of length {r}")
    return int(i > 1) + int(i < r)


def root_multiplicities(word: Word) -> tuple[list[int], list[int]]:
    """``h_i = w_i - deg_{P_m}(i)`` and ``h'_i = w_i - deg_{P_{m-1}}(i)``."""
    m = len(word)
    h = [word[i - 1] - path_degree(i, m) for i in range(1, m + 1)]
    h_prime = [word[i - 1] - path_degree(i, m - 1) for i in range(1, m)]
    return h, h_prime


def _check_multigraph_word(word: Iterable[int]) -> Word:
    word = as_word(word)
    if len(word) < 3:
        raise ConstructionError(f"word of length {len(word)}; need m >= 3")
    return word


def build_multigraph(word: Iterable[int]) -> MultiGraph:
    """Root ``rho``, paths ``u_1..u_m`` and ``u'_1..u'_{m-1}``, parallel root edges.

    Entries are not capped at ``q + 1`` here; there are no anchors to run out of.
    """
    word = _check_multigraph_word(word)
    m = len(word)
    h, h_prime = root_multiplicities(word)
    roles = [ROOT] + [Role("u", i) for i in range(1, m + 1)] \
        + [Role("u_prime", i) for i in range(1, m)]
    u = lambda i: i            # noqa: E731  u_i sits at index i
    up = lambda i: m + i       # noqa: E731  u'_i sits at index m + i
    edges: dict[tuple[int, int], int] = {}
    for i in range(1, m):
        edges[(u(i), u(i + 1))] = 1
    for i in range(1, m - 1):
        edges[(up(i), up(i + 1))] = 1
    for i in range(1, m + 1):
        edges[(0, u(i))] = h[i - 1]
    for i in range(1, m):
        edges[(0, up(i))] = h_prime[i - 1]
    return MultiGraph.from_edges(roles, edges)


def simple_graph_roles(m: int, q: int) -> list[Role]:
    return (
        [ROOT]
        + [Role("u", i) for i in range(1, m + 1)]
        + [Role("v", i) for i in range(1, m + 1)]
        + [Role("u_prime", i) for i in range(1, m)]
        + [Role("v_prime", i) for i in range(1, m)]
        + [Role("anchor", t) for t in range(1, q + 1)]
    )


def build_simple_graph(params: ConstructionParams) -> MultiGraph:
    """The twin-path, anchor-star simple graph on ``4m + q - 1`` vertices.

    Vertex order is ``rho, u, v, u', v', a`` so that deleting ``rho`` leaves
    the cofactor already in block order.
    """
    m, q, word = params.m, params.q, params.word
    h, h_prime = root_multiplicities(word)
    roles = simple_graph_roles(m, q)
    index = {r: k for k, r in enumerate(roles)}
    anchor = lambda t: index[Role("anchor", t)]  # noqa: E731

    edges = [(0, anchor(t)) for t in range(1, q + 1)]
    for kind, length, mults in (
        ("u", m, h), ("v", m, h), ("u_prime", m - 1, h_prime), ("v_prime", m - 1, h_prime),
    ):
        for i in range(1, length):
            edges.append((index[Role(kind, i)], index[Role(kind, i + 1)]))
        for i in range(1, length + 1):
            for t in range(1, mults[i - 1] + 1):
                edges.append((index[Role(kind, i)], anchor(t)))
    return MultiGraph.from_edges(roles, edges)


def pad_graph(graph: MultiGraph, n: int) -> MultiGraph:
    """Append pendant vertices ``z_1..z_l`` on ``a_1`` until there are ``n`` vertices."""
    if n < graph.n:
        raise ConstructionError(f"cannot pad a {graph.n}-vertex graph down to {n}")
    a1 = graph.index_of(Role("anchor", 1))
    start = sum(1 for r in graph.vertices if r.kind == "pad")
    ell = n - graph.n
    roles = list(graph.vertices) + [Role("pad", start + j) for j in range(1, ell + 1)]
    edges = dict(graph.edges)
    for k in range(graph.n, n):
        edges[(a1, k)] = 1
    return MultiGraph.from_edges(roles, edges)


def extract_blocks(params: ConstructionParams) -> CofactorBlocks:
    """Cut the root cofactor of the simple graph into its named blocks.

    Checks the zero pattern and that the twin copies agree entry by entry;
    any mismatch raises :class:`InconsistentBlocks`.
    """
    m, q, word = params.m, params.q, params.word
    graph = build_simple_graph(params)
    roles = simple_graph_roles(m, q)[1:]
    M = cofactor(graph, graph.index_of(ROOT))

    # identity permutation for the canonical vertex order
    pos = {r: k for k, r in enumerate(r for r in graph.vertices if r != ROOT)}
    order = [pos[r] for r in roles]
    M = M.permute(order)

    u = list(range(0, m))
    v = list(range(m, 2 * m))
    up = list(range(2 * m, 3 * m - 1))
    vp = list(range(3 * m - 1, 4 * m - 2))
    a = list(range(4 * m - 2, 4 * m - 2 + q))
    groups = [u, v, up, vp, a]

    A = tridiagonal_matrix(word)
    B = tridiagonal_matrix(word[:-1])
    _require(M.submatrix(u, u) == A, "u block is not T_m(w)")
    _require(M.submatrix(v, v) == A, "v block differs from its twin")
    _require(M.submatrix(up, up) == B, "u' block is not T_{m-1}(w)")
    _require(M.submatrix(vp, vp) == B, "v' block differs from its twin")
    for gi, rows in enumerate(groups[:4]):
        for gj, cols in enumerate(groups[:4]):
            if gi != gj:
                _require(not any(M.submatrix(rows, cols).entries),
                         f"path blocks {gi} and {gj} are coupled")

    P = M.submatrix(u, a)
    Q = M.submatrix(up, a)
    _require(M.submatrix(v, a) == P, "v-anchor block differs from u-anchor block")
    _require(M.submatrix(vp, a) == Q, "v'-anchor block differs from u'-anchor block")
    Pt, Qt = P.transpose(), Q.transpose()
    _require(M.submatrix(a, u) == Pt and M.submatrix(a, v) == Pt, "anchor rows != P^T")
    _require(M.submatrix(a, up) == Qt and M.submatrix(a, vp) == Qt, "anchor rows != Q^T")
    F = M.submatrix(a, a)

    R = block([[B, None, Q], [None, A, P], [Qt.scale(2), Pt.scale(2), F]])
    return CofactorBlocks(A=A, B=B, P=P, Q=Q, F=F, R=R, M=M)
