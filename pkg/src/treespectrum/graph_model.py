"""Loop-free multigraphs with labelled vertex roles.

Vertex order is part of a graph's identity: it fixes the row order of the
Laplacian.  Edge multiplicities count towards degrees, so an edge of
multiplicity ``h`` adds ``h`` to both endpoint degrees.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from treespectrum.exact_linalg import IntMatrix, delete_row_col

# role kind -> tag prefix used in the JSON document
_TAGS = {
    "rho": "rho",
    "anchor": "a",
    "u": "u",
    "v": "v",
    "u_prime": "u'",
    "v_prime": "v'",
    "pad": "z",
    "plain": "plain",
}
_KINDS = {tag: kind for kind, tag in _TAGS.items()}
_TAG_RE = re.compile(r"^(rho|a|u'|v'|u|v|z|plain)(?::(\d+))?$")


class GraphError(ValueError):
    """Invalid graph or malformed graph document."""


@dataclass(frozen=True, order=True)
class Role:
    """What a vertex is in a construction: ``Role("u", 3)`` is u_3."""

    kind: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _TAGS:
            raise GraphError(f"unknown role kind {self.kind!r}")
        if (self.kind == "rho") != (self.index is None):
            raise GraphError(f"role {self.kind!r} index {self.index!r} mismatch")
        if self.index is not None and self.index < 0:
            raise GraphError("negative role index")

    @property
    def tag(self) -> str:
        t = _TAGS[self.kind]
        return t if self.index is None else f"{t}:{self.index}"

    @classmethod
    def parse(cls, tag: str) -> "Role":
        m = _TAG_RE.match(tag) if isinstance(tag, str) else None
        if m is None:
            raise GraphError(f"bad role tag {tag!r}")
        idx = int(m.group(2)) if m.group(2) is not None else None
        return cls(_KINDS[m.group(1)], idx)

    def __str__(self):
        return self.tag


ROOT = Role("rho")

Edge = Tuple[int, int]


@dataclass(frozen=True)
class MultiGraph:
    """Vertices in a fixed order and a multiset of undirected edges.

    ``edges`` is a sorted tuple of ``((u, v), mult)`` with ``u < v`` and
    ``mult >= 1``.  Build instances through :meth:`from_edges`, which
    normalises and validates.
    """

    vertices: Tuple[Role, ...]
    edges: Tuple[Tuple[Edge, int], ...]

    def __post_init__(self):
        n = len(self.vertices)
        seen = set()
        for (u, v), mult in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < n):
                raise GraphError(f"edge ({u}, {v}) not normalised or out of range for {n} vertices")
            if not isinstance(mult, int) or mult < 1:
                raise GraphError(f"edge ({u}, {v}) has multiplicity {mult!r}")
            if (u, v) in seen:
                raise GraphError(f"edge ({u}, {v}) listed twice")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges not sorted")

    @classmethod
    def from_edges(
        cls,
        vertices: Sequence[Role] | int,
        edges: Iterable[Edge] | Mapping[Edge, int],
    ) -> "MultiGraph":
        """Build a graph; repeated pairs in ``edges`` add up multiplicities.

        ``vertices`` may be an int ``n`` for ``n`` plain vertices.  ``edges``
        is either an iterable of pairs or a mapping ``pair -> multiplicity``.
        Zero multiplicities are dropped.
        """
        if isinstance(vertices, int):
            vertices = [Role("plain", i) for i in range(vertices)]
        items = edges.items() if isinstance(edges, Mapping) else ((e, 1) for e in edges)
        acc: dict[Edge, int] = {}
        for (u, v), mult in items:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            acc[key] = acc.get(key, 0) + mult
        for key, mult in acc.items():
            if mult < 0:
                raise GraphError(f"edge {key} has negative multiplicity {mult}")
        return cls(tuple(vertices), tuple(sorted((k, m) for k, m in acc.items() if m)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for e, m in self.edges:
            if e == key:
                return m
        return 0

    def index_of(self, role: Role) -> int:
        return self.vertices.index(role)

    def neighbours(self, i: int) -> list[int]:
        return sorted(v if u == i else u for (u, v), _ in self.edges if i in (u, v))


def laplacian(graph: MultiGraph) -> IntMatrix:
    n = graph.n
    rows = [[0] * n for _ in range(n)]
    for (u, v), mult in graph.edges:
        rows[u][v] -= mult
        rows[v][u] -= mult
        rows[u][u] += mult
        rows[v][v] += mult
    return IntMatrix.from_rows(rows) if n else IntMatrix(0, 0, ())


def cofactor(graph: MultiGraph, vertex_index: int) -> IntMatrix:
    """Laplacian with row and column ``vertex_index`` removed."""
    return delete_row_col(laplacian(graph), vertex_index)


def is_connected(graph: MultiGraph) -> bool:
    if graph.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for (u, v), _ in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == graph.n


def is_simple(graph: MultiGraph) -> bool:
    return all(m == 1 for _, m in graph.edges)


# --- serialisation -----------------------------------------------------------

def graph_to_document(graph: MultiGraph) -> dict:
    return {
        "vertices": [{"id": i, "role": r.tag} for i, r in enumerate(graph.vertices)],
        "edges": [{"u": u, "v": v, "mult": m} for (u, v), m in graph.edges],
    }


def encode_graph(graph: MultiGraph) -> str:
    """Canonical compact JSON: vertices by index, edges sorted, ``u < v``."""
    return json.dumps(graph_to_document(graph), separators=(",", ":"))


def _strict_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise GraphError(f"{what} must be an integer, got {x!r}")
    return x


def document_to_graph(doc) -> MultiGraph:
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise GraphError("document must be an object with exactly 'vertices' and 'edges'")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise GraphError("'vertices' and 'edges' must be arrays")
    roles = []
    for pos, rec in enumerate(doc["vertices"]):
        if not isinstance(rec, dict) or set(rec) != {"id", "role"}:
            raise GraphError(f"vertex record {pos} must have exactly 'id' and 'role'")
        if _strict_int(rec["id"], "vertex id") != pos:
            raise GraphError(f"vertex record {pos} has id {rec['id']}; ids must be 0..n-1 in order")
        roles.append(Role.parse(rec["role"]))
    if len(set(roles)) != len(roles):
        raise GraphError("duplicate vertex roles")
    edges = []
    for pos, rec in enumerate(doc["edges"]):
        if not isinstance(rec, dict) or set(rec) != {"u", "v", "mult"}:
            raise GraphError(f"edge record {pos} must have exactly 'u', 'v' and 'mult'")
        u = _strict_int(rec["u"], "edge endpoint")
        v = _strict_int(rec["v"], "edge endpoint")
        mult = _strict_int(rec["mult"], "multiplicity")
        if u == v:
            raise GraphError(f"edge record {pos} is a loop at vertex {u}")
        if u > v:
            raise GraphError(f"edge record {pos} must have u < v")
        edges.append(((u, v), mult))
    # __post_init__ checks ranges, multiplicities, duplicates and ordering
    return MultiGraph(tuple(roles), tuple(edges))


def decode_graph(text: str) -> MultiGraph:
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from exc
    return document_to_graph(doc)


def _reject_float(s: str):
    raise GraphError(f"floats are not allowed in graph documents: {s}")


def to_dot(graph: MultiGraph, name: str = "G") -> str:
    """Graphviz export; multiplicity goes in a ``label``, one line per edge."""
    lines = [f"graph {name} {{"]
    for i, r in enumerate(graph.vertices):
        lines.append(f'  {i} [label="{r.tag}"];')
    for (u, v), m in graph.edges:
        attr = f' [label="{m}"]' if m > 1 else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
