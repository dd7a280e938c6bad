"""Exhaustive search for cospectral pairs on few vertices, and checks of the
cospectral-corona corollaries."""

from __future__ import annotations

import itertools
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .corona import CoronaKind, corona_of
from .errors import SpectraError
from .graph import Graph, matrix_of, regularity
from .poly import IntPoly, charpoly_exact, coronal

MAX_SEARCH_N = 8

# No two non-isomorphic regular graphs on 8 or fewer vertices are cospectral
# for A, L or Q, so the regular-pair corollaries need a larger witness.  These
# two 4-regular graphs on 10 vertices share the A-polynomial
# x^10 - 20x^8 - 16x^7 + 110x^6 + 136x^5 - 180x^4 - 320x^3 + 9x^2 + 200x + 80
# (and hence L and Q too) but are not isomorphic.
REGULAR_PAIR_10 = (
    Graph.from_edges(10, [(0, 1), (0, 2), (0, 6), (0, 7), (1, 2), (1, 3), (1, 5), (2, 6), (2, 9),
                          (3, 5), (3, 8), (3, 9), (4, 6), (4, 7), (4, 8), (4, 9), (5, 7), (5, 8),
                          (6, 7), (8, 9)]),
    Graph.from_edges(10, [(0, 2), (0, 4), (0, 6), (0, 8), (1, 2), (1, 5), (1, 7), (1, 9), (2, 8),
                          (2, 9), (3, 4), (3, 5), (3, 6), (3, 7), (4, 6), (4, 9), (5, 7), (5, 8),
                          (6, 9), (7, 8)]),
)


def _refine(n: int, adj: list[list[int]]) -> list[int]:
    """Colour refinement started from degrees; colours are isomorphism invariant."""
    colors = [len(a) for a in adj]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(n, code, order): ``code`` is the smallest upper-triangle adjacency
    bit string over all vertex orders consistent with the refined colouring,
    and ``order`` is an ordering attaining it.

    Restricting to colour-respecting orders keeps the form canonical, since
    the colouring itself is invariant; two graphs are isomorphic iff their
    forms agree.
    """
    n = g.n
    if n <= 1:
        return n, 0, tuple(range(n))
    adj = g.neighbors()
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    A = np.zeros((n, n), dtype=np.int64)
    for i, j in g.edges:
        A[i, j] = A[j, i] = 1
    iu, ju = np.triu_indices(n, 1)
    weights = (1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64))
    best_code, best_order = None, None
    cell_perms = [list(itertools.permutations(c)) for c in cells]
    # chunk the product so the 8! worst case stays memory-friendly
    for chunk in _batched(itertools.product(*cell_perms), 8192):
        orders = np.array([sum(p, ()) for p in chunk], dtype=np.int64)
        bits = A[orders[:, iu], orders[:, ju]]
        codes = bits @ weights
        k = int(np.argmin(codes))
        if best_code is None or codes[k] < best_code:
            best_code, best_order = int(codes[k]), tuple(int(v) for v in orders[k])
    return n, best_code, best_order


def _batched(it, size):
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def canonical_graph(g: Graph) -> Graph:
    _, _, order = canonical_form(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[i], pos[j]) for i, j in g.edges])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g)[:2] == canonical_form(h)[:2]


def _extend_shard(args) -> dict[int, Graph]:
    parents, k = args
    found: dict[int, Graph] = {}
    for edges in parents:
        deg = [0] * k
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        for mask in range(1 << k):
            # every graph arises by adding a vertex of maximum degree, so only
            # extensions where the new vertex has maximum degree are needed
            size = bin(mask).count("1")
            if any(deg[i] + (mask >> i & 1) > size for i in range(k)):
                continue
            new = list(edges) + [(i, k) for i in range(k) if mask >> i & 1]
            g = Graph.from_edges(k + 1, new)
            _, code, _ = canonical_form(g)
            if code not in found:
                found[code] = g
    return found


def enumerate_graphs(n: int, workers: int = 1) -> list[Graph]:
    """One canonically labelled representative per isomorphism class on n vertices.

    Built by vertex extension; each level is split into shards of parent
    graphs that can be processed in separate worker processes.
    """
    if n < 1:
        return []
    level: list[Graph] = [Graph(1)]
    for k in range(1, n):
        parents = [g.edges for g in level]
        nshards = max(1, workers * 4)
        shards = [(parents[i::nshards], k) for i in range(nshards)]
        merged: dict[int, Graph] = {}
        if workers > 1:
            with ProcessPoolExecutor(workers) as ex:
                results = list(ex.map(_extend_shard, shards))
        else:
            results = [_extend_shard(s) for s in shards]
        for res in results:
            for code, g in res.items():
                merged.setdefault(code, g)
        level = [canonical_graph(merged[c]) for c in sorted(merged)]
    return level


def cospectral_search(n: int, which: str = "A", regular_only: bool = False,
                      workers: int = 1) -> list[tuple[Graph, Graph, IntPoly]]:
    """All unordered pairs of non-isomorphic graphs on exactly n vertices whose
    characteristic polynomials for ``which`` coincide.

    Output is sorted by canonical code, independent of shard scheduling.
    """
    if n > MAX_SEARCH_N:
        raise SpectraError("TOO_LARGE", f"exhaustive search is limited to n <= {MAX_SEARCH_N}")
    if which not in ("A", "L", "Q"):
        raise SpectraError("INVALID_PARAMS", f"unknown matrix {which!r}")
    graphs = enumerate_graphs(n, workers)
    if regular_only:
        graphs = [g for g in graphs if regularity(g) is not None]
    groups: dict[IntPoly, list[Graph]] = defaultdict(list)
    for g in graphs:
        groups[charpoly_exact(matrix_of(g, which))].append(g)
    pairs = []
    for poly, members in groups.items():
        members.sort(key=lambda h: canonical_form(h)[1])
        for g, h in itertools.combinations(members, 2):
            pairs.append((g, h, poly))
    pairs.sort(key=lambda t: (canonical_form(t[0])[1], canonical_form(t[1])[1]))
    return pairs


def cospectral_search_upto(n: int, which: str = "A", regular_only: bool = False,
                           workers: int = 1):
    out = []
    for k in range(1, n + 1):
        out.extend(cospectral_search(k, which, regular_only, workers))
    return out


def verify_cospectral_corollary(pair: tuple[Graph, Graph], h: Graph, which: str,
                                kind, side: str) -> bool:
    """Check that the two coronae built from a cospectral pair are cospectral.

    ``side="vary_g1"``: the pair plays G1 against the fixed graph ``h``; the pair
    must be regular and cospectral.  ``side="vary_g2"``: ``h`` is the regular G1
    and the pair plays G2; for A and Q the pair must also share its coronal.
    Raises HYPOTHESIS_NOT_MET when the corollary does not apply.
    """
    kind = CoronaKind.parse(kind)
    a, b = pair
    if which not in ("A", "L", "Q"):
        raise SpectraError("INVALID_PARAMS", f"unknown matrix {which!r}")
    if charpoly_exact(matrix_of(a, which)) != charpoly_exact(matrix_of(b, which)):
        raise SpectraError("HYPOTHESIS_NOT_MET", f"pair is not {which}-cospectral")
    if side == "vary_g1":
        ra, rb = regularity(a), regularity(b)
        if ra is None or rb is None or ra != rb:
            raise SpectraError("HYPOTHESIS_NOT_MET", "pair must be regular of equal degree")
        c1, c2 = corona_of(a, h, kind), corona_of(b, h, kind)
    elif side == "vary_g2":
        if regularity(h) is None:
            raise SpectraError("HYPOTHESIS_NOT_MET", "the fixed G1 must be regular")
        if which != "L" and coronal(matrix_of(a, which)) != coronal(matrix_of(b, which)):
            raise SpectraError("HYPOTHESIS_NOT_MET", f"{which}-coronals differ")
        c1, c2 = corona_of(h, a, kind), corona_of(h, b, kind)
    else:
        raise SpectraError("INVALID_PARAMS", f"side must be vary_g1 or vary_g2, got {side!r}")
    return charpoly_exact(matrix_of(c1, which)) == charpoly_exact(matrix_of(c2, which))
