"""Simple undirected graphs, standard families and their integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SpectraError

IntMatrix = list  # list[list[int]], row-major


@dataclass(frozen=True)
class Graph:
    """Vertex count plus a canonical (sorted, deduplicated) edge tuple.

    Vertices are ``0..n-1``; every edge is stored as ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise SpectraError("INVALID_PARAMS", "negative vertex count")
        seen = set()
        for e in self.edges:
            i, j = e
            if not (0 <= i < j < self.n):
                raise SpectraError("INVALID_PARAMS", f"bad edge {e} for n={self.n}")
            if e in seen:
                raise SpectraError("INVALID_PARAMS", f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise SpectraError("INVALID_PARAMS", "edge list not sorted")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build from any iterable of pairs, normalizing orientation and order.

        Self-loops and repeated edges are rejected rather than silently dropped.
        """
        norm = []
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise SpectraError("INVALID_PARAMS", f"self-loop at {i}")
            norm.append((min(i, j), max(i, j)))
        return cls(n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def complete(n: int) -> Graph:
    _check_positive(n)
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    _check_positive(p, q)
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def path(n: int) -> Graph:
    _check_positive(n)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise SpectraError("INVALID_PARAMS", "cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices (the complement of K_n)."""
    _check_positive(n)
    return Graph(n, ())


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    return Graph(g.n, tuple(e for e in combinations(range(g.n), 2) if e not in present))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(i + g.n, j + g.n) for i, j in h.edges]
    return Graph(g.n + h.n, g.edges + tuple(shifted))


def _check_positive(*sizes: int) -> None:
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise SpectraError("INVALID_PARAMS", f"size must be a positive integer, got {s!r}")


FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "empty": (empty, 1),
}


def make_family(kind: str, params) -> Graph:
    """Construct a named family member.

    ``params`` is a list of integers, except for ``complement_of`` which takes
    a :class:`Graph`.
    """
    if kind == "complement_of":
        if not isinstance(params, Graph):
            raise SpectraError("INVALID_PARAMS", "complement_of expects a Graph")
        return complement(params)
    if kind not in FAMILIES:
        raise SpectraError("INVALID_PARAMS", f"unknown family {kind!r}")
    fn, arity = FAMILIES[kind]
    params = list(params)
    if len(params) != arity:
        raise SpectraError("INVALID_PARAMS", f"{kind} takes {arity} parameter(s)")
    return fn(*params)


def matrix_of(g: Graph, which: str) -> IntMatrix:
    """A, L, Q (n x n) or the n x m vertex-edge incidence matrix."""
    n = g.n
    if which == "incidence":
        R = [[0] * g.m for _ in range(n)]
        for k, (i, j) in enumerate(g.edges):
            R[i][k] = 1
            R[j][k] = 1
        return R
    if which not in ("A", "L", "Q"):
        raise SpectraError("INVALID_PARAMS", f"unknown matrix kind {which!r}")
    M = [[0] * n for _ in range(n)]
    off = -1 if which == "L" else 1
    for i, j in g.edges:
        M[i][j] = M[j][i] = off
    if which != "A":
        for v, d in enumerate(g.degrees()):
            M[v][v] = d
    return M


def regularity(g: Graph) -> int | None:
    """Common degree if the graph is regular, else None (the null graph is 0-regular)."""
    deg = g.degrees()
    if not deg:
        return 0
    return deg[0] if all(d == deg[0] for d in deg) else None


def line_graph(g: Graph) -> Graph:
    incident = [[] for _ in range(g.n)]
    for k, (i, j) in enumerate(g.edges):
        incident[i].append(k)
        incident[j].append(k)
    edges = set()
    for inc in incident:
        edges.update(combinations(inc, 2))
    return Graph(g.m, tuple(sorted(edges)))
