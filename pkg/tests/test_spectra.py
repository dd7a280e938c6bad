import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subcorona.errors import SpectraError
from subcorona.graph import complete, cycle, matrix_of
from subcorona.poly import IntPoly, charpoly_exact
from subcorona.spectra import SpectrumMultiset, eigenvalues_sym, real_roots, spectra_equal

from .conftest import graphs

x = IntPoly.x()


def test_eigenvalues_sym_examples():
    assert spectra_equal(eigenvalues_sym(matrix_of(complete(3), "A")), [-1, -1, 2], 1e-12)
    assert spectra_equal(eigenvalues_sym(matrix_of(complete(2), "L")), [0, 2], 1e-12)
    assert spectra_equal(eigenvalues_sym(matrix_of(cycle(4), "A")), [-2, 0, 0, 2], 1e-12)


def test_not_symmetric():
    with pytest.raises(SpectraError) as err:
        eigenvalues_sym([[0, 1], [0, 0]])
    assert err.value.code == "NOT_SYMMETRIC"


def test_real_roots_examples():
    p = x ** 3 - 3 * x - 2
    # division oracle: (x - 2)(x + 1)^2 leaves no remainder
    assert p.exact_div(x - 2).exact_div(x + 1) == x + 1
    assert spectra_equal(real_roots(p), [-1, -1, 2], 1e-10)
    assert spectra_equal(real_roots(x ** 2 - 1), [-1, 1], 1e-12)
    r1, lam, n2 = 4, 4, 1
    assert spectra_equal(real_roots(x ** 3 - (r1 + lam + n2) * x), [-3, 0, 3], 1e-12)


def test_real_roots_high_multiplicity():
    p = x ** 10 * (x ** 2 - 9) * (x ** 2 - 4) ** 4
    assert real_roots(p).multiplicities() == [(-3.0, 1), (-2.0, 4), (0.0, 10), (2.0, 4), (3.0, 1)]


def test_complex_roots_rejected():
    with pytest.raises(SpectraError) as err:
        real_roots(x ** 2 + 1)
    assert err.value.code == "COMPLEX_ROOTS"


def test_spectra_equal_examples():
    assert spectra_equal([1.0, 2.0], [2.0, 1.0], 1e-8)
    assert spectra_equal([0.0], [1e-12], 1e-8)
    assert not spectra_equal([0.0], [1e-3], 1e-8)
    assert not spectra_equal([0.0], [0.0, 0.0], 1e-8)


def test_multiplicity_view_json():
    s = SpectrumMultiset([2, -1, -1])
    assert s.to_json() == {"values": [-1.0, -1.0, 2.0], "multiplicities": [[-1.0, 2], [2.0, 1]]}


@st.composite
def symmetric_int_matrices(draw):
    n = draw(st.integers(1, 12))
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = draw(st.integers(-5, 5))
    return M


@settings(max_examples=40, deadline=None)
@given(symmetric_int_matrices())
def test_eigensolver_agrees_with_charpoly_roots(M):
    assert spectra_equal(eigenvalues_sym(M), real_roots(charpoly_exact(M)), 1e-7)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_laplacian_nonnegative_and_trace(g):
    mu = eigenvalues_sym(matrix_of(g, "L"))
    assert abs(mu.values[0]) < 1e-8
    assert all(v > -1e-8 for v in mu)
    for which in "ALQ":
        M = matrix_of(g, which)
        assert abs(sum(eigenvalues_sym(M)) - np.trace(np.array(M))) < 1e-8
