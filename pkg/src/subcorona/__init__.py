"""Spectra of subdivision-vertex and subdivision-edge coronae."""

from .cospectral import (
    REGULAR_PAIR_10,
    are_isomorphic,
    canonical_form,
    cospectral_search,
    enumerate_graphs,
    verify_cospectral_corollary,
)
from .corona import CoronaKind, CoronaLabeling, CoronaSpec, corona, corona_of, subdivision
from .errors import SpectraError
from .graph import Graph, line_graph, make_family, matrix_of, regularity
from .invariants import (
    IntegralFamilyParams,
    integral_family,
    is_integral,
    kirchhoff_formula,
    kirchhoff_oracle,
    spanning_trees_formula,
    spanning_trees_oracle,
)
from .poly import (
    IntPoly,
    RationalFunc,
    charpoly_exact,
    coronal,
    coronal_constant_rowsum,
    homogeneous_eval,
)
from .spectra import SpectrumMultiset, eigenvalues_sym, real_roots, spectra_equal
from .theorems import (
    FactoredCharPoly,
    kpq_spectrum,
    theorem_charpoly,
    theorem_spectrum,
    theorem_spectrum_regular,
)

__version__ = "0.1.0"
