"""Subdivision graphs and the subdivision-vertex / subdivision-edge coronae."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import SpectraError
from .graph import Graph


class CoronaKind(str, Enum):
    VERTEX = "vertex"  # G1 ⊙ G2: one copy of G2 per original vertex
    EDGE = "edge"      # G1 ⊖ G2: one copy of G2 per inserted vertex

    @classmethod
    def parse(cls, value) -> CoronaKind:
        if isinstance(value, cls):
            return value
        aliases = {"vertex": cls.VERTEX, "subdivision_vertex": cls.VERTEX, "⊙": cls.VERTEX,
                   "edge": cls.EDGE, "subdivision_edge": cls.EDGE, "⊖": cls.EDGE}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise SpectraError("INVALID_PARAMS", f"unknown corona kind {value!r}") from None


@dataclass(frozen=True)
class CoronaSpec:
    g1: Graph
    g2: Graph
    kind: CoronaKind

    def __post_init__(self):
        object.__setattr__(self, "kind", CoronaKind.parse(self.kind))
        if self.g1.n < 1 or self.g2.n < 1:
            raise SpectraError("INVALID_PARAMS", "both graphs need at least one vertex")
        if self.kind is CoronaKind.EDGE and self.g1.m == 0:
            raise SpectraError("EDGE_REQUIRED", "subdivision-edge corona needs an edge in G1")

    @property
    def copies(self) -> int:
        return self.g1.n if self.kind is CoronaKind.VERTEX else self.g1.m

    def vertex_count(self) -> int:
        n1, m1, n2 = self.g1.n, self.g1.m, self.g2.n
        if self.kind is CoronaKind.VERTEX:
            return n1 * (1 + n2) + m1
        return m1 * (1 + n2) + n1

    def edge_count(self) -> int:
        n1, m1, n2, m2 = self.g1.n, self.g1.m, self.g2.n, self.g2.m
        if self.kind is CoronaKind.VERTEX:
            return 2 * m1 + n1 * (n2 + m2)
        return m1 * (2 + n2 + m2)


@dataclass(frozen=True)
class CoronaLabeling:
    """Where each part of the construction lives in ``0..N-1``.

    Copies are stored copy-major: copy ``i`` is a contiguous block, so
    ``copy(i, j)`` is the image of vertex ``j`` of G2 in copy ``i``.  The
    vertex-major ``W_j`` grouping is a permutation of this layout.
    """

    original: range
    inserted: range
    copies: tuple[range, ...] = ()

    def copy(self, i: int, j: int) -> int:
        return self.copies[i][j]

    def to_json(self) -> dict:
        return {
            "original": list(self.original),
            "inserted": list(self.inserted),
            "copies": [list(c) for c in self.copies],
        }


def subdivision(g: Graph) -> tuple[Graph, CoronaLabeling]:
    """Insert a vertex into every edge; the k-th sorted edge gets label n + k."""
    n = g.n
    edges = []
    for k, (i, j) in enumerate(g.edges):
        edges.append((i, n + k))
        edges.append((j, n + k))
    return Graph(n + g.m, tuple(sorted(edges))), CoronaLabeling(range(n), range(n, n + g.m))


def corona(spec: CoronaSpec) -> tuple[Graph, CoronaLabeling]:
    g1, g2 = spec.g1, spec.g2
    base_graph, base = subdivision(g1)
    edges = list(base_graph.edges)
    start = base_graph.n
    anchors = base.original if spec.kind is CoronaKind.VERTEX else base.inserted
    copies = []
    for i, hub in enumerate(anchors):
        off = start + i * g2.n
        block = range(off, off + g2.n)
        copies.append(block)
        edges.extend((hub, w) for w in block)
        edges.extend((off + a, off + b) for a, b in g2.edges)
    total = start + len(anchors) * g2.n
    labeling = CoronaLabeling(base.original, base.inserted, tuple(copies))
    return Graph(total, tuple(sorted(edges))), labeling


def corona_of(g1: Graph, g2: Graph, kind) -> Graph:
    return corona(CoronaSpec(g1, g2, kind))[0]
