from __future__ import annotations

import pytest
from hypothesis import given

from conftest import ids, labels, small_graphs
from critset.fixtures import EDGE_LISTS, fixture
from critset.graph import (
    Graph,
    GraphError,
    closed_neighborhood,
    components,
    delete_closed_neighborhood,
    difference,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_independent,
    is_tree,
    neighborhood,
    pendant_vertices,
)
from critset.io import ParseError, parse_dimacs, parse_edge_list, to_dimacs, to_edge_list


def test_edge_list_path():
    G = parse_edge_list("a b\nb c")
    assert (G.n, G.m) == (3, 2)
    assert G.labels == ("a", "b", "c")


def test_edge_list_comments_and_blank_lines():
    G = parse_edge_list("# header\n\na b  # trailing\n\nb c\n")
    assert (G.n, G.m) == (3, 2)


def test_edge_list_single_label_declares_isolated_vertex():
    G = parse_edge_list("a b\nc\n")
    assert G.n == 3 and G.isolated_vertices() == (2,)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("a a", "self-loop"),
        ("a b\nb a", "duplicate"),
        ("a b\na b", "duplicate"),
        ("a b c", "line 1"),
    ],
)
def test_edge_list_rejects(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


def test_malformed_line_reports_its_number():
    with pytest.raises(ParseError) as info:
        parse_edge_list("a b\nb c\nc d e\n")
    assert info.value.lineno == 3


def test_dimacs_k2_and_p3():
    K2 = parse_dimacs("p edge 2 1\ne 1 2")
    assert (K2.n, K2.m) == (2, 1)
    P3 = parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3")
    assert (P3.n, P3.m) == (3, 2) and P3.adj[1] == (0, 2)


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\np edge 2 1",
        "p edge 2 1\ne 1 3",
        "p edge 2 1\ne 1 1",
        "p edge 2 2\ne 1 2\ne 2 1",
        "p edge 3 2\ne 1 2",
        "e 1 2",
        "",
    ],
)
def test_dimacs_rejects(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_fixture_sizes():
    sizes = {name: (fixture(name).n, fixture(name).m) for name in EDGE_LISTS}
    assert sizes == {
        "G1": (5, 5),
        "G2": (7, 7),
        "G3": (12, 15),
        "Gfig3": (15, 16),
        "K2": (2, 1),
        "P3": (3, 2),
        "K23": (5, 6),
        "C5": (5, 5),
    }


@pytest.mark.parametrize("name", list(EDGE_LISTS))
def test_round_trip_fixtures(name):
    G = fixture(name)
    assert parse_edge_list(to_edge_list(G)) == G
    D = parse_dimacs(to_dimacs(G))
    assert D.adj == G.adj


@given(small_graphs(max_n=9))
def test_round_trip_random(G):
    again = parse_edge_list(to_edge_list(G))
    assert again == G
    assert again._index == G._index


def test_neighborhood_examples():
    P3 = fixture("P3")
    assert labels(P3, neighborhood(P3, ids(P3, "a", "c"))) == {"b"}
    K2 = fixture("K2")
    assert labels(K2, neighborhood(K2, ids(K2, "a"))) == {"b"}
    G2 = fixture("G2")
    X = ids(G2, "x", "y", "z", "p", "q")
    assert labels(G2, neighborhood(G2, X)) == {"a", "b", "p", "q"}


def test_difference_examples():
    G1, G2 = fixture("G1"), fixture("G2")
    assert difference(G1, ()) == 0
    assert difference(G2, ids(G2, "x", "y", "z", "p", "q")) == 1
    assert difference(G1, ids(G1, "a", "b")) == 1


def test_induced_subgraph_examples():
    P3 = fixture("P3")
    H, old = induced_subgraph(P3, ids(P3, "a", "c"))
    assert (H.n, H.m) == (2, 0) and labels(P3, old) == {"a", "c"}
    G2 = fixture("G2")
    H, old = induced_subgraph(G2, ids(G2, "x", "a", "z", "b"))
    assert H.m == 3 and is_tree(H) and sorted(map(H.degree, range(4))) == [1, 1, 2, 2]
    same, _ = induced_subgraph(G2, range(G2.n))
    assert same.adj == G2.adj


def test_delete_closed_neighborhood_examples():
    P3 = fixture("P3")
    H, keep = delete_closed_neighborhood(P3, P3.id_of("b"))
    assert H.n == 0 and keep == ()
    H, keep = delete_closed_neighborhood(P3, P3.id_of("a"))
    assert H.n == 1 and labels(P3, keep) == {"c"}
    G2 = fixture("G2")
    H, keep = delete_closed_neighborhood(G2, G2.id_of("x"))
    assert labels(G2, keep) == {"y", "z", "b", "p", "q"}


def test_predicates():
    P3, G2, K23 = fixture("P3"), fixture("G2"), fixture("K23")
    assert is_independent(P3, ids(P3, "a", "c"))
    assert not is_independent(P3, ids(P3, "a", "b"))
    assert labels(G2, pendant_vertices(G2)) == {"x", "y"}
    assert is_bipartite(K23) and not is_bipartite(fixture("C5"))
    assert is_connected(G2) and is_tree(P3) and not is_tree(fixture("C5"))
    assert len(components(parse_edge_list("a b\nc d\ne\n"))) == 3


def test_graph_rejects_bad_construction():
    with pytest.raises(GraphError):
        Graph.from_edges([(0, 0)], n=1)
    with pytest.raises(GraphError):
        Graph.from_edges([(0, 3)], n=2)
    with pytest.raises(GraphError):
        neighborhood(fixture("K2"), [5])


@given(small_graphs())
def test_neighborhood_is_union_of_adjacencies(G):
    X = tuple(range(0, G.n, 2))
    expected = set().union(*(set(G.adj[x]) for x in X)) if X else set()
    assert set(neighborhood(G, X)) == expected
    assert set(closed_neighborhood(G, X)) == expected | set(X)
    if is_independent(G, X):
        assert not set(neighborhood(G, X)) & set(X)
