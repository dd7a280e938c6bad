"""Spanning trees, Kirchhoff index and integral-graph families, each with an
independent oracle computed on the assembled corona."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .corona import CoronaKind, CoronaSpec, corona
from .errors import SpectraError
from .graph import Graph, complete, complete_bipartite, empty, matrix_of, regularity
from .poly import IntPoly, charpoly_exact, det_bareiss, integer_roots
from .spectra import CLUSTER_TOL, eigenvalues_sym
from .theorems import theorem_charpoly, theorem_spectrum_blocks

# Largest corona handed to the dense eigensolver when checking a family.
DIRECT_LIMIT = 2500


def spanning_trees_oracle(g: Graph) -> int:
    """Matrix-tree theorem: any cofactor of the Laplacian."""
    if g.n <= 1:
        return 1
    if not g.is_connected():
        return 0
    L = matrix_of(g, "L")
    return det_bareiss([row[1:] for row in L[1:]])


def _laplacian_core(g: Graph) -> IntPoly:
    # φ(L; x)/x = prod over the eigenvalues other than μ_1 = 0
    return charpoly_exact(matrix_of(g, "L")).exact_div(IntPoly.x())


def _regular_connected(g1: Graph) -> int:
    r1 = regularity(g1)
    if r1 is None:
        raise SpectraError("REG_REQUIRED", "G1 must be regular")
    if not g1.is_connected():
        raise SpectraError("DISCONNECTED", "G1 must be connected")
    return r1


def spanning_trees_formula(spec: CoronaSpec) -> int:
    g1, g2 = spec.g1, spec.g2
    r1 = _regular_connected(g1)
    n1, m1, n2 = g1.n, g1.m, g2.n
    psi1 = _laplacian_core(g1)
    n1_t1 = (-1) ** (n1 - 1) * psi1(0)           # prod_{i>=2} μ_i(G1) = n1 t(G1)
    shifted = (-1) ** (n2 - 1) * _laplacian_core(g2)(-1)  # prod_{i>=2} (1 + μ_i(G2))
    if spec.kind is CoronaKind.VERTEX:
        val = Fraction(2) ** (m1 - n1) * (2 + r1 + 2 * n2) * n1_t1 * shifted ** n1
        val /= n1 + m1 + n1 * n2
    else:
        val = Fraction(2) ** (m1 - n1) * (2 + r1 + r1 * n2) * n1_t1 * shifted ** m1
        val /= n1 + m1 + m1 * n2
    if val.denominator != 1:
        raise SpectraError("INEXACT_DIVISION", f"spanning-tree count {val} is not an integer")
    return int(val)


def kirchhoff_oracle(g: Graph) -> float:
    """n * sum of 1/μ over the nonzero Laplacian eigenvalues."""
    if g.n < 2:
        raise SpectraError("INVALID_PARAMS", "need at least two vertices")
    if not g.is_connected():
        raise SpectraError("DISCONNECTED", "graph must be connected")
    mu = eigenvalues_sym(matrix_of(g, "L")).values
    return g.n * sum(1.0 / x for x in mu[1:])


def _reciprocal_sum(psi: IntPoly, at: int) -> Fraction:
    """sum_i 1/(μ_i - at) over the roots μ_i of psi, i.e. -psi'(at)/psi(at)."""
    return Fraction(-psi.derivative()(at), psi(at))


def kirchhoff_formula(spec: CoronaSpec) -> Fraction:
    """Kirchhoff index of the corona, exact, from the G1/G2 Laplacian polynomials."""
    g1, g2 = spec.g1, spec.g2
    r1 = _regular_connected(g1)
    n1, m1, n2 = g1.n, g1.m, g2.n
    kf1 = n1 * _reciprocal_sum(_laplacian_core(g1), 0)
    inv_shift = _reciprocal_sum(_laplacian_core(g2), -1)  # sum_{i>=2} 1/(1 + μ_i(G2))
    N = spec.vertex_count()
    if spec.kind is CoronaKind.VERTEX:
        k = 2 + r1 + 2 * n2
        inner = Fraction(m1 + n1 - 2, 2) + Fraction(3 + r1 + n2, k) + Fraction(k, n1) * kf1 + n1 * inv_shift
    else:
        k = 2 + r1 + r1 * n2
        inner = (Fraction((3 + n2) * m1 - (n2 + 1) * n1 - 2, 2) + Fraction(3 + r1 + n2, k)
                 + Fraction(k, n1) * kf1 + m1 * inv_shift)
    return N * inner


def is_integral(spectrum, tol: float = 1e-7) -> bool:
    """True iff every value is within ``tol`` of an integer.

    Accepts plain values or (value, multiplicity) pairs.
    """
    vals = (v[0] if isinstance(v, tuple) else v for v in spectrum)
    return all(abs(v - round(v)) <= tol for v in vals)


FAMILY_NAMES = ("vertex_complete", "vertex_bipartite", "edge_complete", "edge_bipartite")


@dataclass(frozen=True)
class IntegralFamilyParams:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise SpectraError("INVALID_PARAMS", f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        want = 1 if self.family == "edge_complete" else 2
        if len(self.params) != want:
            raise SpectraError("INVALID_PARAMS", f"{self.family} takes {want} parameter(s)")


@dataclass(frozen=True)
class IntegralFamily:
    n1: int
    n2: int
    spec: CoronaSpec

    @cached_property
    def graph(self) -> Graph:
        return corona(self.spec)[0]


def _bipartite_sizes(s: int, t: int) -> tuple[int, int]:
    if s < 1 or t < 1:
        raise SpectraError("INVALID_PARAMS", "s, t must be >= 1")
    return 4 * s * t * t * (2 * s * s + 3 * s + 1), t * t * (2 * s * s - 1) ** 2


def integral_family(params: IntegralFamilyParams) -> IntegralFamily:
    fam, p = params.family, params.params
    if fam == "vertex_complete":
        s, h = p
        if not (h >= 2 and s >= 3 and h * h < s * s < 2 * h * h + 2):
            raise SpectraError("INVALID_PARAMS", "need h >= 2, s >= 3, h^2 < s^2 < 2h^2 + 2")
        n1, n2 = s * s - h * h, 2 * h * h - s * s + 2
        spec = CoronaSpec(complete(n1), empty(n2), CoronaKind.VERTEX)
    elif fam == "edge_complete":
        (t,) = p
        if t < 1:
            raise SpectraError("INVALID_PARAMS", "t must be >= 1")
        n1, n2 = 2 * t + 3, t * t
        spec = CoronaSpec(complete(n1), empty(n2), CoronaKind.EDGE)
    else:
        n1, n2 = _bipartite_sizes(*p)
        kind = CoronaKind.VERTEX if fam == "vertex_bipartite" else CoronaKind.EDGE
        spec = CoronaSpec(complete_bipartite(n1, n1), empty(n2), kind)
    return IntegralFamily(n1, n2, spec)


def vertex_complete_range(h: int) -> list[int]:
    """All s with h^2 < s^2 < 2h^2 + 2 (and s >= 3)."""
    out = []
    s = max(3, h + 1)
    while s * s < 2 * h * h + 2:
        out.append(s)
        s += 1
    return out


def family_spectrum(fam: IntegralFamily) -> tuple[list[tuple[float, int]], str]:
    """A-spectrum of the family member as (value, multiplicity) pairs, plus
    the route used to compute it.

    Small coronae go straight to the dense eigensolver; beyond
    ``DIRECT_LIMIT`` vertices the regular-G2 assembly is used, and its blocks
    are merged without materializing every repeated value.
    """
    if fam.spec.vertex_count() <= DIRECT_LIMIT:
        return eigenvalues_sym(matrix_of(fam.graph, "A")).multiplicities(), "direct"
    weighted = []
    for blk in theorem_spectrum_blocks(fam.spec, "A"):
        weighted.extend((v, blk.mult) for v in blk.values)
    return cluster_weighted(weighted), "theorem"


def cluster_weighted(pairs, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    out: list[tuple[float, int]] = []
    last = None
    for v, k in sorted(pairs):
        if out and v - last <= tol:
            val, cnt = out[-1]
            out[-1] = (val, cnt + k)
        else:
            out.append((v, k))
        last = v
    return [(float(round(v)) if abs(v - round(v)) < 1e-9 else v, k) for v, k in out]


def integer_root_check(fam: IntegralFamily) -> bool:
    """Every factor of the theorem polynomial splits into integer linear factors."""
    for p, _ in theorem_charpoly(fam.spec, "A").factors:
        roots, rest = integer_roots(p)
        if rest.degree != 0 or sum(k for _, k in roots) != p.degree:
            return False
    return True
