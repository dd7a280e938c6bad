from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subcorona.corona import CoronaSpec, corona
from subcorona.errors import SpectraError
from subcorona.graph import Graph, complete, complete_bipartite, cycle, empty, matrix_of, path
from subcorona.invariants import (
    IntegralFamilyParams,
    family_spectrum,
    integer_root_check,
    integral_family,
    is_integral,
    kirchhoff_formula,
    kirchhoff_oracle,
    spanning_trees_formula,
    spanning_trees_oracle,
    vertex_complete_range,
)

from .conftest import REGULAR_G1, graphs


def brute_trees(g: Graph) -> int:
    count = 0
    for sub in combinations(g.edges, g.n - 1):
        if Graph.from_edges(g.n, sub).is_connected():
            count += 1
    return count


def pinv_kirchhoff(g: Graph) -> float:
    L = np.array(matrix_of(g, "L"), dtype=float)
    return g.n * float(np.trace(np.linalg.pinv(L)))


@pytest.mark.parametrize("g", [complete(4), cycle(5), path(4), complete_bipartite(2, 3)])
def test_tree_oracle_against_enumeration(g):
    assert spanning_trees_oracle(g) == brute_trees(g)


def test_small_kirchhoff_values():
    assert kirchhoff_oracle(path(3)) == pytest.approx(4)
    assert kirchhoff_oracle(complete(2)) == pytest.approx(1)
    assert kirchhoff_oracle(complete(3)) == pytest.approx(2)


def test_known_corona_values():
    spec = CoronaSpec(complete(3), empty(1), "vertex")
    assert spanning_trees_formula(spec) == 6
    assert kirchhoff_formula(spec) == Fraction(63)
    assert spanning_trees_formula(CoronaSpec(cycle(4), empty(1), "vertex")) == 8


@pytest.mark.parametrize("kind", ["vertex", "edge"])
@pytest.mark.parametrize("name", sorted(REGULAR_G1))
def test_formulas_match_oracles(name, kind):
    for g2 in (empty(1), empty(2), complete(2), path(3), complete(3), complete_bipartite(1, 2)):
        spec = CoronaSpec(REGULAR_G1[name], g2, kind)
        g = corona(spec)[0]
        assert spanning_trees_formula(spec) == spanning_trees_oracle(g)
        kf = kirchhoff_formula(spec)
        assert isinstance(kf, Fraction)
        assert float(kf) == pytest.approx(kirchhoff_oracle(g), rel=1e-9)
        assert float(kf) == pytest.approx(pinv_kirchhoff(g), rel=1e-9)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["K3", "C4", "C5"]), graphs(max_n=4), st.sampled_from(["vertex", "edge"]))
def test_tree_formula_property(name, g2, kind):
    spec = CoronaSpec(REGULAR_G1[name], g2, kind)
    assert spanning_trees_formula(spec) == spanning_trees_oracle(corona(spec)[0])


def test_disconnected_and_irregular_rejected():
    with pytest.raises(SpectraError) as err:
        spanning_trees_formula(CoronaSpec(Graph.from_edges(4, [(0, 1), (2, 3)]), empty(1), "vertex"))
    assert err.value.code == "DISCONNECTED"
    with pytest.raises(SpectraError) as err:
        kirchhoff_formula(CoronaSpec(path(3), empty(1), "vertex"))
    assert err.value.code == "REG_REQUIRED"


def test_is_integral():
    assert is_integral([1.0, -2.0000000001, 3])
    assert is_integral([(2.0, 3), (0.0, 1)])
    assert not is_integral([1.5])


def test_vertex_complete_range():
    assert vertex_complete_range(2) == [3]
    assert vertex_complete_range(3) == [4]
    assert vertex_complete_range(4) == [5]
    assert vertex_complete_range(6) == [7, 8]


def test_family_sizes():
    fam = integral_family(IntegralFamilyParams("vertex_bipartite", (1, 1)))
    assert (fam.n1, fam.n2) == (24, 1)
    fam = integral_family(IntegralFamilyParams("vertex_complete", (3, 2)))
    assert (fam.n1, fam.n2) == (5, 1)
    fam = integral_family(IntegralFamilyParams("edge_complete", (1,)))
    assert (fam.n1, fam.n2) == (5, 1)


def test_family_members_are_k5_coronae():
    a = integral_family(IntegralFamilyParams("vertex_complete", (3, 2))).graph
    b = integral_family(IntegralFamilyParams("edge_complete", (1,))).graph
    assert a == corona(CoronaSpec(complete(5), empty(1), "vertex"))[0]
    assert b == corona(CoronaSpec(complete(5), empty(1), "edge"))[0]


@pytest.mark.parametrize("name,params", [
    ("vertex_complete", (3, 2)),
    ("vertex_complete", (8, 6)),
    ("edge_complete", (2,)),
    ("vertex_bipartite", (1, 1)),
    ("edge_bipartite", (1, 1)),
])
def test_family_integral(name, params):
    fam = integral_family(IntegralFamilyParams(name, params))
    pairs, route = family_spectrum(fam)
    assert sum(k for _, k in pairs) == fam.spec.vertex_count()
    assert is_integral(pairs, 1e-7)
    assert integer_root_check(fam)


def test_large_family_uses_blocks():
    fam = integral_family(IntegralFamilyParams("edge_bipartite", (1, 2)))
    pairs, route = family_spectrum(fam)
    assert route == "theorem"
    assert sum(k for _, k in pairs) == fam.spec.vertex_count()
    assert is_integral(pairs)


@pytest.mark.parametrize("name,params", [
    ("vertex_complete", (2, 2)),
    ("vertex_complete", (3, 1)),
    ("vertex_complete", (5, 3)),
    ("edge_complete", (0,)),
    ("vertex_bipartite", (0, 1)),
    ("edge_bipartite", (1,)),
    ("nope", (1,)),
])
def test_invalid_params(name, params):
    with pytest.raises(SpectraError) as err:
        integral_family(IntegralFamilyParams(name, params))
    assert err.value.code == "INVALID_PARAMS"
