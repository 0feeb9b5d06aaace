from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import ids, labels, small_graphs
from critset.fixtures import fixture
from critset.generate import gnp
from critset.graph import GraphError, is_independent
from critset.matching import max_matching_general
from critset.mis import (
    GuardExceeded,
    alpha_bounds,
    enumerate_maximum_independent_sets,
    exact_alpha,
    greedy_independent_set,
    is_local_max_independent_set,
)
from critset.oracle import Oracle


@pytest.mark.parametrize("name, alpha", [("P3", 2), ("G2", 4), ("K23", 3), ("C5", 2), ("K2", 1)])
def test_exact_alpha(name, alpha):
    assert exact_alpha(fixture(name)) == alpha


def test_omega_g1():
    G1 = fixture("G1")
    om = enumerate_maximum_independent_sets(G1)
    assert {frozenset(labels(G1, S)) for S in om.sets} == {
        frozenset("abz"),
        frozenset("abw"),
    }
    assert labels(G1, om.core) == {"a", "b"}


@pytest.mark.parametrize(
    "name, core",
    [("G2", {"x", "y", "z"}), ("Gfig3", {"a", "b", "c", "u"}), ("G3", {"t", "u", "v", "w"})],
)
def test_core(name, core):
    G = fixture(name)
    assert labels(G, enumerate_maximum_independent_sets(G).core) == core


def test_local_maximum_examples():
    G2, P3, G1 = fixture("G2"), fixture("P3"), fixture("G1")
    assert is_local_max_independent_set(G2, ids(G2, "x"))
    assert not is_local_max_independent_set(P3, ids(P3, "b"))
    assert is_local_max_independent_set(G1, ids(G1, "a", "b"))
    with pytest.raises(GraphError):
        is_local_max_independent_set(P3, ids(P3, "a", "b"))


def test_guards_raise_with_bounds():
    G = gnp(70, 0.1, 5)
    with pytest.raises(GuardExceeded) as info:
        exact_alpha(G)
    lo, hi = info.value.bounds
    assert lo <= hi <= G.n - max_matching_general(G).size
    with pytest.raises(GuardExceeded):
        enumerate_maximum_independent_sets(gnp(41, 0.1, 5))
    with pytest.raises(GuardExceeded):
        exact_alpha(gnp(60, 0.1, 1), node_budget=3)


def test_alpha_bounds_bracket():
    G = fixture("G3")
    lo, hi = alpha_bounds(G, mu=max_matching_general(G).size, dc=1)
    assert lo <= exact_alpha(G) <= hi


@settings(max_examples=300, deadline=None)
@given(small_graphs(max_n=12))
def test_against_oracle(G):
    om = enumerate_maximum_independent_sets(G)
    assert om == Oracle(G).omega
    assert exact_alpha(G) == om.alpha
    assert all(is_independent(G, S) for S in om.sets)
    greedy = greedy_independent_set(G)
    assert is_independent(G, greedy) and len(greedy) <= om.alpha
