"""Critical sets, the critical difference, ker, core and corona of simple graphs."""

from __future__ import annotations

from .critical import (
    critical_difference,
    critical_independence_difference,
    critical_profile,
    find_critical_set,
    largest_critical_set,
    independent_part,
    is_quasi_regularizable,
    ker_fast,
    ker_slow,
    max_critical_independent_set,
)
from .graph import Graph, GraphError, difference, neighborhood
from .io import ParseError, parse_dimacs, parse_edge_list, read_graph
from .matching import max_bipartite_matching, max_matching_general
from .mis import GuardExceeded, enumerate_maximum_independent_sets, exact_alpha
from .report import AnalysisReport, analyze
from .verify import CHECK_IDS, VerifyConfig, run_checks

__all__ = [
    "AnalysisReport",
    "CHECK_IDS",
    "Graph",
    "GraphError",
    "GuardExceeded",
    "ParseError",
    "VerifyConfig",
    "analyze",
    "critical_difference",
    "critical_independence_difference",
    "critical_profile",
    "difference",
    "enumerate_maximum_independent_sets",
    "exact_alpha",
    "find_critical_set",
    "independent_part",
    "is_quasi_regularizable",
    "largest_critical_set",
    "ker_fast",
    "ker_slow",
    "max_bipartite_matching",
    "max_critical_independent_set",
    "max_matching_general",
    "neighborhood",
    "parse_dimacs",
    "parse_edge_list",
    "read_graph",
    "run_checks",
]
