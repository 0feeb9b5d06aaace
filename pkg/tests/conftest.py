from __future__ import annotations

import pytest
from hypothesis import strategies as st

from critset.fixtures import fixture
from critset.graph import Graph


def labels(G: Graph, xs) -> set[str]:
    return {G.labels[x] for x in xs}


def ids(G: Graph, *names: str) -> tuple[int, ...]:
    return G.ids(names)


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([e for e, keep in zip(pairs, mask) if keep], n=n)


@pytest.fixture(params=["G1", "G2", "G3", "Gfig3", "K2", "P3", "K23", "C5"])
def any_fixture(request) -> tuple[str, Graph]:
    return request.param, fixture(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
