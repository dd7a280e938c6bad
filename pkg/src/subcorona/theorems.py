"""Closed-form characteristic polynomials of G1 ⊙ G2 and G1 ⊖ G2 for an
r1-regular G1, evaluated exactly, plus the spectrum assemblies for regular G2.

No eigenvalue of G1 is ever extracted.  A product over eigenvalues λ of G1 of
a factor (u(x) - λ v(x)) equals ``homogeneous_eval(chi, u, v)`` where chi is
the characteristic polynomial of the relevant G1 matrix.  The evaluation is
done per square-free part of chi so that high multiplicities stay factored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .corona import CoronaKind, CoronaSpec
from .errors import SpectraError
from .graph import Graph, matrix_of, regularity
from .poly import (
    IntPoly,
    charpoly_exact,
    coronal,
    homogeneous_eval,
    poly_prod,
    squarefree_decomposition,
)
from .spectra import CLUSTER_TOL, SpectrumMultiset, real_roots

X = IntPoly.x()
MATRICES = ("A", "L", "Q")


@dataclass
class FactoredCharPoly:
    factors: list[tuple[IntPoly, int]] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return sum(p.degree * k for p, k in self.factors)

    @cached_property
    def expanded(self) -> IntPoly:
        return poly_prod(p ** k for p, k in self.factors)

    def spectrum(self) -> SpectrumMultiset:
        values = []
        for p, k in self.factors:
            values.extend(list(real_roots(p)) * k)
        return SpectrumMultiset(values)

    def to_json(self) -> dict:
        return {
            "factors": [[p.to_json(), k] for p, k in self.factors],
            "expanded": self.expanded.to_json(),
        }


def _require_regular(g: Graph, name: str) -> int:
    r = regularity(g)
    if r is None:
        raise SpectraError("REG_REQUIRED", f"{name} must be regular")
    return r


def _check_which(which: str, allowed=MATRICES) -> str:
    if which not in allowed:
        raise SpectraError("INVALID_PARAMS", f"matrix must be one of {allowed}, got {which!r}")
    return which


def theorem_charpoly(spec: CoronaSpec, which: str) -> FactoredCharPoly:
    """Characteristic polynomial of A, L or Q of the corona from the G1/G2 data alone."""
    _check_which(which)
    g1, g2 = spec.g1, spec.g2
    r1 = _require_regular(g1, "G1")
    n1, m1, n2 = g1.n, g1.m, g2.n
    vertex = spec.kind is CoronaKind.VERTEX
    copies = n1 if vertex else m1
    excess = m1 - n1

    if which == "A":
        chi1 = charpoly_exact(matrix_of(g1, "A"))
        gam = coronal(matrix_of(g2, "A"))
        c, d = gam.num, gam.den
        g2_part = charpoly_exact(matrix_of(g2, "A")).exact_div(d)
        # x^2 - Γ(x) x - r1 - λ, scaled by d
        u = X * X * d - c * X - d * r1
        v = d
        flat = X if vertex else X * d - c
    elif which == "L":
        chi1 = charpoly_exact(matrix_of(g1, "L"))
        # prod_{i>=2} (x - 1 - μ_i(G2)) drops the zero Laplacian eigenvalue
        g2_part = charpoly_exact(matrix_of(g2, "L")).shift(-1).exact_div(X - 1)
        lin = 2 + r1 + 2 * n2 if vertex else 2 + r1 + r1 * n2
        u = IntPoly((0, lin, -(3 + r1 + n2), 1))
        v = IntPoly((1, -1))
        flat = X - 2 if vertex else IntPoly((2, -(3 + n2), 1))
    else:
        chi1 = charpoly_exact(matrix_of(g1, "Q"))
        gam = coronal(matrix_of(g2, "Q")).shift(-1)  # Γ_Q(x - 1)
        c, d = gam.num, gam.den
        g2_part = charpoly_exact(matrix_of(g2, "Q")).shift(-1).exact_div(d)
        u = X * X * d - X * d * (2 + r1 + n2) - X * c
        if vertex:
            u = u + d * (2 * (r1 + n2)) + c * 2
            flat = X - 2
        else:
            u = u + d * (r1 * (2 + n2)) + c * r1
            flat = (X - 2 - n2) * d - c
        v = d

    factors = [(g2_part, copies)]
    for s, k in squarefree_decomposition(chi1):
        factors.append((homogeneous_eval(s, u, v), k))
    if excess >= 0:
        factors.append((flat, excess))
    else:
        factors = _cancel(factors, flat, -excess)
    factors = [(p, k) for p, k in factors if k > 0 and p.degree > 0]
    for p, _ in factors:
        if not p.is_monic():
            raise SpectraError("INEXACT_DIVISION", f"non-monic factor {p}")
    out = FactoredCharPoly(factors)
    if out.degree != spec.vertex_count():
        raise SpectraError("INEXACT_DIVISION", "degree bookkeeping failed")
    return out


def _cancel(factors, g: IntPoly, e: int):
    """Divide g^e out of prod p^k exactly (used when G1 has fewer edges than vertices)."""
    out = []
    for p, k in factors:
        if e == 0 or g.degree < 1:
            out.append((p, k))
            continue
        j, q = 0, p
        while j < e:
            res = q.divmod_exact(g)
            if res is None or not res[1].is_zero():
                break
            q, j = res[0], j + 1
        if j == 0:
            out.append((p, k))
            continue
        full = min(k, e // j)
        reduced = p
        for _ in range(j):
            reduced = reduced.exact_div(g)
        if full:
            out.append((reduced, full))
            e -= full * j
        left = k - full
        if left and e:
            part = p
            for _ in range(e):
                part = part.exact_div(g)
            out.append((part, 1))
            left -= 1
            e = 0
        if left:
            out.append((p, left))
    if e:
        raise SpectraError("INEXACT_DIVISION", f"could not cancel ({g})^{e}")
    return out


@dataclass
class SpectrumBlock:
    """Eigenvalues contributed by one part of a corollary, each repeated ``mult`` times."""

    label: str
    values: list[float]
    mult: int


def _blocks_to_spectrum(blocks: list[SpectrumBlock]) -> SpectrumMultiset:
    vals = []
    for b in blocks:
        vals.extend(b.values * b.mult)
    return SpectrumMultiset(vals)


def _root_block(label: str, chi: IntPoly, u: IntPoly, v: IntPoly) -> list[SpectrumBlock]:
    """Roots of u - λ v over every eigenvalue λ (with multiplicity) of chi."""
    return [SpectrumBlock(label, list(real_roots(homogeneous_eval(s, u, v))), k)
            for s, k in squarefree_decomposition(chi)]


def _apply_flat(blocks, label, flat_values: list[float], count: int, from_label: str):
    """Append a repeated block, or for a negative count remove those values
    from the per-eigenvalue block (they are guaranteed to occur there)."""
    if count >= 0:
        blocks.append(SpectrumBlock(label, flat_values, count))
        return
    for target in flat_values:
        need = -count
        for b in blocks:
            if b.label != from_label or not need:
                continue
            hits = [i for i, z in enumerate(b.values)
                    if abs(z - target) <= 1e-7 * max(1.0, abs(target))]
            take = min(len(hits), need // b.mult)
            for i in reversed(hits[:take]):
                b.values.pop(i)
            need -= take * b.mult
        if need:
            raise SpectraError("INEXACT_DIVISION", f"could not remove {target} x{-count}")


def theorem_spectrum_blocks(spec: CoronaSpec, which: str) -> list[SpectrumBlock]:
    _check_which(which, ("A", "Q"))
    g1, g2 = spec.g1, spec.g2
    r1 = _require_regular(g1, "G1")
    r2 = _require_regular(g2, "G2")
    n1, m1, n2 = g1.n, g1.m, g2.n
    vertex = spec.kind is CoronaKind.VERTEX
    copies = n1 if vertex else m1
    excess = m1 - n1
    blocks: list[SpectrumBlock] = []

    if which == "A":
        rest = charpoly_exact(matrix_of(g2, "A")).exact_div(X - r2)
        if rest.degree > 0:
            blocks.append(SpectrumBlock("G2 eigenvalues", list(real_roots(rest)), copies))
        chi1 = charpoly_exact(matrix_of(g1, "A"))
        u = IntPoly((r1 * r2, -(r1 + n2), -r2, 1))
        v = IntPoly((-r2, 1))
        blocks += _root_block("cubic", chi1, u, v)
        if vertex:
            _apply_flat(blocks, "zero", [0.0], excess, "cubic")
        else:
            quad = IntPoly((-n2, -r2, 1))
            _apply_flat(blocks, "quadratic", list(real_roots(quad)), excess, "cubic")
    else:
        shifted = charpoly_exact(matrix_of(g2, "Q")).shift(-1)
        rest = shifted.exact_div(X - 1 - 2 * r2)
        if rest.degree > 0:
            blocks.append(SpectrumBlock("G2 eigenvalues + 1", list(real_roots(rest)), copies))
        chi1 = charpoly_exact(matrix_of(g1, "Q"))
        a = 3 + r1 + 2 * r2 + n2
        if vertex:
            b0 = 2 + 3 * r1 + 2 * r1 * r2 + 4 * r2 + 2 * r2 * n2 + 2 * n2
            c0 = -2 * r1 - 4 * r1 * r2 - 4 * r2 * n2
        else:
            b0 = 2 + r1 * n2 + 2 * r1 * r2 + 2 * r2 * n2 + 3 * r1 + 4 * r2
            c0 = -2 * r1 - 4 * r1 * r2 - 2 * r1 * r2 * n2
        u = IntPoly((c0, b0, -a, 1))
        v = IntPoly((-1 - 2 * r2, 1))
        blocks += _root_block("cubic", chi1, u, v)
        if vertex:
            _apply_flat(blocks, "two", [2.0], excess, "cubic")
        else:
            quad = IntPoly((2 * (1 + 2 * r2 + r2 * n2), -(3 + 2 * r2 + n2), 1))
            _apply_flat(blocks, "quadratic", list(real_roots(quad)), excess, "cubic")

    total = sum(len(b.values) * b.mult for b in blocks)
    if total != spec.vertex_count():
        raise SpectraError("INEXACT_DIVISION", f"assembled {total} values, expected {spec.vertex_count()}")
    return blocks


def theorem_spectrum_regular(spec: CoronaSpec, which: str) -> SpectrumMultiset:
    """Spectrum of A or Q of the corona when both G1 and G2 are regular."""
    return _blocks_to_spectrum(theorem_spectrum_blocks(spec, which))


def kpq_spectrum_blocks(g: Graph, p: int, q: int, kind) -> list[SpectrumBlock]:
    kind = CoronaKind.parse(kind)
    r = _require_regular(g, "G")
    if p < 1 or q < 1 or g.m < g.n:
        raise SpectraError("INVALID_PARAMS", "need p, q >= 1 and m >= n")
    n, m = g.n, g.m
    chi = charpoly_exact(matrix_of(g, "A"))
    u = IntPoly((p * q * r, -2 * p * q, -(p * q + p + q + r), 0, 1))
    v = IntPoly((-p * q, 0, 1))
    blocks = _root_block("quartic", chi, u, v)
    if kind is CoronaKind.VERTEX:
        blocks.append(SpectrumBlock("zero", [0.0], m + (p + q - 3) * n))
    else:
        blocks.append(SpectrumBlock("zero", [0.0], m * (p + q - 2)))
        cubic = IntPoly((-2 * p * q, -(p * q + p + q), 0, 1))
        if m - n:
            blocks.append(SpectrumBlock("cubic", list(real_roots(cubic)), m - n))
    return blocks


def kpq_spectrum(g: Graph, p: int, q: int, kind) -> SpectrumMultiset:
    """A-spectrum of G ⊙ K_{p,q} or G ⊖ K_{p,q} for regular G with m >= n."""
    return _blocks_to_spectrum(kpq_spectrum_blocks(g, p, q, kind))


def theorem_spectrum(spec: CoronaSpec, which: str) -> SpectrumMultiset:
    """Roots of the factored theorem polynomial (works for any G2)."""
    return theorem_charpoly(spec, which).spectrum()


__all__ = [
    "FactoredCharPoly",
    "SpectrumBlock",
    "theorem_charpoly",
    "theorem_spectrum",
    "theorem_spectrum_blocks",
    "theorem_spectrum_regular",
    "kpq_spectrum",
    "kpq_spectrum_blocks",
    "CLUSTER_TOL",
]
