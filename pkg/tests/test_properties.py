"""Structural invariants over random small graphs."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from critset.critical import critical_difference, ker_fast
from critset.graph import difference
from critset.matching import max_matching_general
from critset.mis import enumerate_maximum_independent_sets
from critset.oracle import Oracle
from critset.report import analyze
from critset.verify import FAIL, VerifyConfig, run_checks


@settings(max_examples=200, deadline=None)
@given(small_graphs(max_n=10), st.data())
def test_difference_is_supermodular(G, data):
    full = (1 << G.n) - 1
    a = data.draw(st.integers(0, full))
    b = data.draw(st.integers(0, full))
    d = Oracle(G).difference
    assert d(a | b) + d(a & b) >= d(a) + d(b)
    assert d(0) == 0 and critical_difference(G) >= 0


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=10))
def test_critical_sets_form_a_lattice_with_ker_at_the_bottom(G):
    brute = Oracle(G)
    crit = set(brute.critical_masks)
    for a in list(crit)[:30]:
        for b in list(crit)[:30]:
            assert a | b in crit and a & b in crit
    ker = sum(1 << v for v in ker_fast(G))
    assert ker in crit and all(m & ker == ker for m in crit)


@settings(max_examples=200, deadline=None)
@given(small_graphs(max_n=11))
def test_chain_and_ker_inside_core(G):
    om = enumerate_maximum_independent_sets(G)
    ker = ker_fast(G)
    dc = critical_difference(G)
    gap = om.alpha - max_matching_general(G).size
    assert G.n >= om.zeta >= om.alpha >= om.xi >= len(ker) >= dc >= gap
    assert om.xi >= gap + len(ker) - dc
    assert set(ker) <= set(om.core)
    assert difference(G, ker) == dc


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=9))
def test_proved_checks_never_fail(G):
    proved = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
              "C10", "C12", "C13", "C15", "C16", "C17")
    rep = run_checks(G, VerifyConfig(checks=proved))
    assert not [r for r in rep.results if r.outcome == FAIL], rep.to_dict()
    assert not rep.internal_errors


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=9))
def test_outputs_are_pure(G):
    assert analyze(G).to_dict() == analyze(G).to_dict()
    assert run_checks(G).to_dict() == run_checks(G).to_dict()
