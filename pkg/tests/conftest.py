import itertools

import pytest
from hypothesis import strategies as st

from subcorona.graph import Graph, complete, complete_bipartite, cycle, empty, path

REGULAR_G1 = {
    "K3": complete(3),
    "K4": complete(4),
    "K5": complete(5),
    "C4": cycle(4),
    "C5": cycle(5),
    "C6": cycle(6),
    "K33": complete_bipartite(3, 3),
}

G2_SUITE = {
    "E1": empty(1),
    "E2": empty(2),
    "K2": complete(2),
    "P3": path(3),
    "K3": complete(3),
    "K12": complete_bipartite(1, 2),
}


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def sympy_charpoly(M):
    """Independent oracle: sympy's Berkowitz characteristic polynomial."""
    import sympy

    x = sympy.Symbol("x")
    p = sympy.Matrix(M).charpoly(x)
    return [int(c) for c in reversed(p.all_coeffs())]


@pytest.fixture
def regular_g1():
    return REGULAR_G1


@pytest.fixture
def g2_suite():
    return G2_SUITE


# acceptance lines, printed again in the terminal summary so they are visible
# without -s
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
