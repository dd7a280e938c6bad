"""Exact univariate polynomials over Z, rational functions, characteristic
polynomials and matrix coronals.

Coefficient lists are stored constant term first.  Everything here is exact;
floating point only appears in :meth:`IntPoly.__call__` when the caller
passes a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import SpectraError

# Above this dimension charpoly_exact hands off to FLINT.
FLINT_THRESHOLD = 96


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> IntPoly:
        return cls((0,) * k + (a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            body = "x" if k == 1 else f"x^{k}" if k else ""
            if body and mag == 1:
                coef = ""
            else:
                coef = str(mag) + ("*" if body else "")
            terms.append((sign, coef + body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def shift(self, a: int) -> IntPoly:
        """p(x + a), by repeated synthetic division (Taylor shift)."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        return IntPoly(c)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(a // g for a in self.coeffs)

    def divmod_exact(self, other: IntPoly) -> tuple[IntPoly, IntPoly] | None:
        """Quotient and remainder over Z, or None if a non-integral quotient
        coefficient appears (only possible when ``other`` is not monic)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dl = d[-1]
        nq = len(r) - len(d) + 1
        if nq <= 0:
            return IntPoly(), self
        q = [0] * nq
        for k in range(nq - 1, -1, -1):
            top = r[k + len(d) - 1]
            if top == 0:
                continue
            qk, rem = divmod(top, dl)
            if rem:
                return None
            q[k] = qk
            for i, di in enumerate(d):
                r[k + i] -= qk * di
        return IntPoly(q), IntPoly(r)

    def exact_div(self, other: IntPoly) -> IntPoly:
        res = self.divmod_exact(other)
        if res is None or not res[1].is_zero():
            raise SpectraError("INEXACT_DIVISION", f"({self}) / ({other}) is not exact")
        return res[0]

    def divides(self, other: IntPoly) -> bool:
        res = other.divmod_exact(self)
        return res is not None and res[1].is_zero()

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> IntPoly:
        return cls(int(a) for a in data)


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def poly_prod(polys: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly.const(1)
    for p in polys:
        out = out * p
    return out


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a.coeffs)
    d = b.coeffs
    lb = d[-1]
    db = len(d) - 1
    delta = len(r) - 1 - db
    if delta < 0:
        return a
    for k in range(delta, -1, -1):
        top = r[k + db]
        r = [lb * v for v in r]
        if top:
            for i, di in enumerate(d):
                r[k + i] -= top * di
        r.pop()
    return IntPoly(r)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """GCD over Z[x] by the subresultant PRS, normalized to positive leading coefficient."""
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero():
        return -a if a.lc < 0 else a
    d = gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        r = prem(a, b)
        if r.is_zero():
            break
        if r.degree == 0:
            b = IntPoly.const(1)
            break
        a = b
        div = g * h ** delta
        b = IntPoly(c // div for c in r.coeffs)
        g = a.lc
        if delta == 0:
            pass
        else:
            h = g ** delta // h ** (delta - 1)
    return b.primitive() * d


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: p = c * prod s_k^k with pairwise coprime square-free s_k.

    Only non-constant parts are returned; for monic p every part is monic.
    """
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = _divide_primitive(p, a)
    c = _divide_primitive(dp, a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = _divide_primitive(b, a)
        c = _divide_primitive(d, a)
        d = c - b.derivative()
        k += 1
    return out


def _divide_primitive(p: IntPoly, q: IntPoly) -> IntPoly:
    # q | p over Q; clear the content so the quotient lands in Z[x]
    q = q.primitive()
    res = p.divmod_exact(q)
    if res is None:
        scaled = p * (q.lc ** (p.degree - q.degree + 1))
        res = scaled.divmod_exact(q)
    quotient, rem = res
    if not rem.is_zero():
        raise SpectraError("INEXACT_DIVISION", f"({p}) / ({q})")
    return quotient


class RationalFunc:
    """num/den over Z[x], kept reduced with den of positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = IntPoly(), IntPoly.const(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            # g is primitive, so by Gauss's lemma both quotients are integral
            num = num.exact_div(g)
            den = den.exact_div(g)
        c = gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        self.num = IntPoly(a // c for a in num.coeffs)
        self.den = IntPoly(a // c for a in den.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunc(({self.num}) / ({self.den}))"

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def shift(self, a: int) -> RationalFunc:
        """Γ(x + a)."""
        return RationalFunc(self.num.shift(a), self.den.shift(a))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _as_square(M) -> list[list[int]]:
    rows = [list(map(int, r)) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise SpectraError("NON_SQUARE", "matrix must be square")
    return rows


def faddeev_leverrier(M) -> tuple[IntPoly, IntPoly]:
    """Characteristic polynomial det(xI - M) together with 1^T adj(xI - M) 1.

    Runs the recurrence N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k)/k,
    where adj(xI - M) = sum_k N_k x^(n-k).  For an integer matrix every
    division by k is exact; this is checked rather than assumed.
    """
    rows = _as_square(M)
    n = len(rows)
    if n == 0:
        return IntPoly.const(1), IntPoly()
    A = np.array(rows, dtype=object)
    eye = np.zeros((n, n), dtype=object)
    np.fill_diagonal(eye, 1)
    c = [0] * (n + 1)
    c[n] = 1
    adj_sums = [0] * n  # adj_sums[j] is the x^j coefficient of 1^T adj 1
    N = eye.copy()
    for k in range(1, n + 1):
        if k > 1:
            N = AN
            N[np.diag_indices(n)] += c[n - k + 1]
        adj_sums[n - k] = int(N.sum())
        AN = A.dot(N)
        q, r = divmod(-int(np.trace(AN)), k)
        if r:
            raise SpectraError("INEXACT_DIVISION", "non-integral characteristic coefficient")
        c[n - k] = q
    return IntPoly(c), IntPoly(adj_sums)


def _flint_charpoly(rows: list[list[int]]) -> IntPoly:
    import flint

    p = flint.fmpz_mat(rows).charpoly()
    return IntPoly(int(a) for a in p.coeffs())


def charpoly_exact(M) -> IntPoly:
    """det(xI - M) for a square integer matrix."""
    rows = _as_square(M)
    if len(rows) > FLINT_THRESHOLD:
        return _flint_charpoly(rows)
    return faddeev_leverrier(rows)[0]


def coronal(M) -> RationalFunc:
    """Sum of the entries of (xI - M)^{-1} as a reduced rational function."""
    rows = _as_square(M)
    n = len(rows)
    if n > FLINT_THRESHOLD:
        # matrix determinant lemma: det(B + 11^T) = det B + 1^T adj(B) 1
        shifted = [[a - 1 for a in r] for r in rows]
        chi = _flint_charpoly(rows)
        num = _flint_charpoly(shifted) - chi
        return RationalFunc(num, chi)
    chi, num = faddeev_leverrier(rows)
    return RationalFunc(num, chi)


def coronal_constant_rowsum(n: int, t: int) -> RationalFunc:
    """n/(x - t): the coronal of any n x n matrix with every row sum equal to t."""
    if n < 1:
        raise SpectraError("INVALID_PARAMS", "n must be positive")
    return RationalFunc(IntPoly.const(n), IntPoly((-t, 1)))


def homogeneous_eval(chi: IntPoly, u: IntPoly, v: IntPoly) -> IntPoly:
    """sum_k a_k u^k v^(d-k) for chi = sum_k a_k y^k, i.e. prod_i (u - λ_i v)."""
    if not chi.is_monic():
        raise SpectraError("NOT_MONIC", f"{chi} is not monic")
    d = chi.degree
    nz = [k for k, a in enumerate(chi.coeffs) if a]
    # only powers that actually get used
    upow = _powers(u, nz)
    vpow = _powers(v, [d - k for k in nz])
    out = IntPoly()
    for k in nz:
        out = out + upow[k] * vpow[d - k] * chi.coeffs[k]
    return out


def _powers(p: IntPoly, exps: list[int]) -> dict[int, IntPoly]:
    needed = sorted(set(exps))
    out = {}
    cur, at = IntPoly.const(1), 0
    for e in needed:
        cur = cur * p ** (e - at)
        at = e
        out[e] = cur
    return out


def det_bareiss(M) -> int:
    """Fraction-free Gaussian elimination determinant."""
    a = [list(map(int, r)) for r in M]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def integer_roots(p: IntPoly) -> tuple[list[tuple[int, int]], IntPoly]:
    """Split off every integer root with its multiplicity.

    Returns ``([(root, mult), ...], cofactor)``; the cofactor has no integer
    roots.  Candidates come from the square-free part's trailing coefficient.
    """
    roots = []
    k = 0
    while k < len(p.coeffs) and p.coeffs[k] == 0:
        k += 1
    if k:
        roots.append((0, k))
        p = IntPoly(p.coeffs[k:])
    if p.degree < 1:
        return roots, p
    parts = squarefree_decomposition(p)
    rest = p
    for s, _ in parts:
        for r in _integer_roots_squarefree(s):
            lin = IntPoly((-r, 1))
            mult = 0
            while True:
                res = rest.divmod_exact(lin)
                if res is None or not res[1].is_zero():
                    break
                rest = res[0]
                mult += 1
            roots.append((r, mult))
    roots.sort()
    return roots, rest


def _integer_roots_squarefree(s: IntPoly) -> list[int]:
    # any integer root divides the constant term; locate them numerically then confirm exactly
    if s.coeffs[0] == 0:
        return [0] + _integer_roots_squarefree(IntPoly(s.coeffs[1:]))
    bound = abs(s.coeffs[0])
    found = []
    big = max(abs(a) for a in s.coeffs)
    approx = np.roots([float(Fraction(a, big)) for a in reversed(s.coeffs)])
    cands = {int(round(z.real)) for z in approx if abs(z.imag) < 0.5}
    for r in sorted(cands):
        if r and bound % abs(r) == 0 and s(r) == 0:
            found.append(r)
    return found
