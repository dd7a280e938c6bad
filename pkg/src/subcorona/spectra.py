"""Floating-point spectra: symmetric eigenvalues, real roots of integer
polynomials, and tolerance-aware multiset comparison."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import SpectraError
from .poly import IntPoly, squarefree_decomposition

CLUSTER_TOL = 1e-8
IMAG_TOL = 1e-8


@dataclass(frozen=True)
class SpectrumMultiset:
    values: tuple[float, ...]

    def __init__(self, values: Iterable[float]):
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in values)))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def multiplicities(self, tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
        """Cluster consecutive values closer than ``tol`` into (value, count) pairs."""
        out: list[tuple[float, int]] = []
        group: list[float] = []
        for v in self.values:
            if group and v - group[-1] > tol:
                out.append((_tidy(sum(group) / len(group)), len(group)))
                group = []
            group.append(v)
        if group:
            out.append((_tidy(sum(group) / len(group)), len(group)))
        return out

    def count_near(self, value: float, tol: float = CLUSTER_TOL) -> int:
        return sum(1 for v in self.values if abs(v - value) <= tol * max(1.0, abs(value)))

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "multiplicities": [[v, c] for v, c in self.multiplicities()],
        }


def _tidy(v: float) -> float:
    # snap cluster means onto nearby integers so printed spectra read cleanly
    r = round(v)
    return float(r) if abs(v - r) < 1e-9 else v


def eigenvalues_sym(M) -> SpectrumMultiset:
    a = np.asarray(M, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectraError("NON_SQUARE", "matrix must be square")
    if a.size and np.max(np.abs(a - a.T)) > 1e-12:
        raise SpectraError("NOT_SYMMETRIC", "matrix is not symmetric")
    if a.shape[0] == 0:
        return SpectrumMultiset(())
    return SpectrumMultiset(np.linalg.eigvalsh(a))


def _float_coeffs(p: IntPoly) -> np.ndarray:
    # scale by the largest coefficient so huge integers survive the float conversion
    big = max(abs(a) for a in p.coeffs)
    return np.array([float(Fraction(a, big)) for a in p.coeffs])


def _companion_roots(p: IntPoly) -> np.ndarray:
    c = _float_coeffs(p)
    d = p.degree
    if d == 1:
        return np.array([-c[0] / c[1]], dtype=complex)
    comp = np.zeros((d, d))
    comp[1:, :-1] = np.eye(d - 1)
    comp[:, -1] = -c[:-1] / c[-1]
    # LAPACK geev balances the matrix before the QR iteration
    roots = np.linalg.eigvals(comp).astype(complex)
    # a couple of Newton steps tighten roots of moderately conditioned factors
    dc = np.array([k * c[k] for k in range(1, d + 1)])
    for _ in range(3):
        f = np.polyval(c[::-1], roots)
        fp = np.polyval(dc[::-1], roots)
        ok = fp != 0
        roots[ok] = roots[ok] - f[ok] / fp[ok]
    return roots


def real_roots(p: IntPoly) -> SpectrumMultiset:
    """All roots of p with multiplicity; raises COMPLEX_ROOTS if any is non-real.

    Multiplicities come from an exact square-free decomposition; each
    square-free part is solved through its companion matrix.
    """
    if p.is_zero():
        raise SpectraError("INVALID_PARAMS", "zero polynomial has no finite root set")
    out: list[float] = []
    for part, mult in squarefree_decomposition(p):
        for z in _companion_roots(part):
            if abs(z.imag) > IMAG_TOL * max(1.0, abs(z.real)):
                raise SpectraError("COMPLEX_ROOTS", f"root {z} of {part}")
            out.extend([float(z.real)] * mult)
    return SpectrumMultiset(out)


def spectra_equal(s1, s2, tol: float = 1e-8) -> bool:
    a = sorted(s1)
    b = sorted(s2)
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol * max(1.0, abs(x)) for x, y in zip(a, b))


def max_residual(s1, s2) -> float:
    """Largest |s1[k] - s2[k]| after sorting; inf on a length mismatch."""
    a = sorted(s1)
    b = sorted(s2)
    if len(a) != len(b):
        return float("inf")
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)
