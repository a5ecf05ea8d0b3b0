import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.graph import (
    GraphError,
    SimplicialGraph,
    complete_graph,
    cycle_graph,
    frucht_graph,
    full_star_vertices,
    has_separating_star,
    has_sil,
    induced_components,
    is_sil,
    ladder_graph,
    link_condition_holds,
    separating_star_vertices,
    star_containments,
    star_graph,
)

from oracles import all_graphs, brute_separating_stars, brute_sils, nx_components, random_graph, to_nx


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimplicialGraph(range(n), [p for p, keep in zip(pairs, mask) if keep])


def test_construction_rejects_bad_input():
    with pytest.raises(GraphError):
        SimplicialGraph([1, 1])
    with pytest.raises(GraphError):
        SimplicialGraph([1, 2], [(1, 1)])
    with pytest.raises(GraphError):
        SimplicialGraph([1, 2], [(1, 3)])


def test_edges_are_unordered():
    g = SimplicialGraph("ab", [("a", "b"), ("b", "a")])
    assert len(g.edges) == 1
    assert g.adjacent("b", "a")


def test_induced_components_examples():
    g = star_graph()
    assert induced_components(g, {"x", "y", "z"}) == [{"x"}, {"y"}, {"z"}]
    c5 = cycle_graph(5)
    assert induced_components(c5, c5.vertices) == [set(c5.vertices)]
    assert induced_components(c5, {"v2", "v3"}) == [{"v2", "v3"}]
    assert induced_components(c5, set()) == []
    with pytest.raises(GraphError):
        induced_components(c5, {"nope"})


def test_separating_star_examples():
    assert has_separating_star(star_graph()) == "x"
    assert has_separating_star(ladder_graph()) == "v"
    assert "v" in separating_star_vertices(ladder_graph())
    assert has_separating_star(complete_graph(range(5))) is None
    assert has_separating_star(cycle_graph(5)) is None


def test_c5_has_no_separating_star_vertex_by_vertex():
    c5 = cycle_graph(5)
    for v in c5.vertices:
        rest = set(c5.vertices) - c5.star(v)
        assert len(rest) == 2
        a, b = rest
        assert c5.adjacent(a, b)


def test_sil_examples():
    assert has_sil(star_graph()) == ("x", "y", "z")
    assert has_sil(ladder_graph()) is None
    assert has_sil(complete_graph(range(3))) is None


def test_star_containments_examples():
    assert ("x", "c") in star_containments(star_graph())
    assert star_containments(frucht_graph()) == []
    assert star_containments(SimplicialGraph("uw")) == []


def test_link_condition_examples():
    g = star_graph()
    # (x, y) violates it; the least violating pair under the vertex order is (x, c)
    assert g.link("x") <= g.star("y")
    assert link_condition_holds(g) == (False, ("x", "c"))
    assert link_condition_holds(cycle_graph(5)) == (True, None)
    assert link_condition_holds(SimplicialGraph([0])) == (True, None)


def test_full_star_vertices_examples():
    assert full_star_vertices(star_graph()) == {"c"}
    assert full_star_vertices(complete_graph(range(4))) == set(range(4))
    assert full_star_vertices(cycle_graph(5)) == set()


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_link_star_basics(g):
    for v in g.vertices:
        assert v not in g.link(v)
        assert g.star(v) == g.link(v) | {v}
        assert len(g.star(v)) == g.degree(v) + 1


@settings(max_examples=200, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_components_partition(g, rng):
    s = {v for v in g.vertices if rng.random() < 0.7}
    comps = induced_components(g, s)
    assert set().union(*comps) == s if comps else not s
    assert sum(len(c) for c in comps) == len(s)
    assert sorted(map(frozenset, nx_components(g, s)), key=min) == comps
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_separating_star_matches_networkx(g):
    brute = brute_separating_stars(g)
    assert separating_star_vertices(g) == brute
    assert has_separating_star(g) == (brute[0] if brute else None)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_sil_matches_definition(g):
    brute = brute_sils(g)
    found = has_sil(g)
    assert found == (min(brute) if brute else None)
    if found is not None:
        assert is_sil(g, *found)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_three_components_force_separating_star(g):
    if len(nx_components(g, g.vertices)) >= 3:
        assert has_separating_star(g) is not None


def test_no_separating_star_implies_no_sil_up_to_seven():
    for n in range(1, 7):
        for g in all_graphs(n):
            if has_separating_star(g) is None:
                assert has_sil(g) is None
    # n = 7 up to isomorphism, from the networkx atlas
    import networkx as nx

    seven = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7]
    assert len(seven) == 1044
    for h in seven:
        g = SimplicialGraph(h.nodes, h.edges)
        if has_separating_star(g) is None:
            assert has_sil(g) is None, sorted(h.edges)


def test_frucht_is_the_cubic_asymmetric_graph():
    import networkx as nx

    g = frucht_graph()
    assert len(g) == 12 and len(g.edges) == 18
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert nx.is_isomorphic(to_nx(g), nx.frucht_graph())


def test_frucht_matches_lettered_edge_list():
    import networkx as nx

    lettered = [
        "AH", "HE", "EG", "GF", "FC", "CB", "BA", "AI", "ID",
        "DH", "DE", "IL", "LK", "KF", "KG", "JB", "JC", "JL",
    ]
    h = SimplicialGraph("ABCDEFGHIJKL", [tuple(e) for e in lettered])
    assert nx.is_isomorphic(to_nx(h), to_nx(frucht_graph()))
