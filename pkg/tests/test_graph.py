import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from discmatch.errors import InputError
from discmatch.graph import (
    Failure,
    Graph,
    Matching,
    connected_components,
    count_components_within,
    diameter,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_perfect_elimination_order,
    verify_matching,
)
from helpers import complete, cycle, disjoint_edges, graphs, path


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(InputError):
        Graph(2, [[1], []])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_basics():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(2, 1), (1, 2)])
    g = Graph.from_edges(4, [(2, 1), (0, 1)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count == 2
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g == Graph.from_edges(4, [(0, 1), (1, 2)])
    assert hash(g) == hash(Graph.from_edges(4, [(0, 1), (1, 2)]))


def test_matching_rejects_shared_vertex():
    with pytest.raises(InputError):
        Matching([(0, 1), (1, 2)])
    m = Matching([(3, 2), (0, 1)])
    assert list(m) == [(0, 1), (2, 3)]
    assert m.saturated == {0, 1, 2, 3}
    assert (2, 3) in m and m.mate()[3] == 2


def test_induced_subgraph_of_path():
    sub, order = induced_subgraph(path(4), [0, 1, 3])
    assert order == [0, 1, 3]
    assert sub.edges() == [(0, 1)]
    assert sub.degree(2) == 0


def test_induced_subgraph_empty_and_clique():
    sub, order = induced_subgraph(path(5), [])
    assert sub.n == 0 and order == []
    sub, _ = induced_subgraph(complete(4), [0, 2, 3])
    assert sub == complete(3)
    with pytest.raises(InputError):
        induced_subgraph(path(3), [5])


@pytest.mark.parametrize("g, count", [(complete(2), 1), (disjoint_edges(2), 2), (Graph.from_edges(3, []), 3)])
def test_connected_components_counts(g, count):
    lab = connected_components(g)
    assert lab.count == count
    assert sorted(set(lab.label)) == list(range(count))


def test_verify_matching_examples():
    p5 = path(5)
    assert verify_matching(p5, Matching([(0, 1), (3, 4)]), 2, 2)
    v = verify_matching(path(4), Matching([(0, 1), (2, 3)]), 2, 2)
    assert v.reason is Failure.TOO_FEW_COMPONENTS
    assert str(v).startswith("fails(too-few-components)")
    assert verify_matching(p5, Matching(), 0, 0)
    v = verify_matching(p5, Matching([(0, 2)]), 1, 1)
    assert v.reason is Failure.NOT_A_MATCHING
    v = verify_matching(p5, [(0, 1), (1, 2)], 1, 1)
    assert v.reason is Failure.NOT_A_MATCHING
    v = verify_matching(p5, Matching([(0, 1)]), 2, 1)
    assert v.reason is Failure.TOO_FEW_EDGES
    assert str(verify_matching(p5, Matching([(0, 1), (3, 4)]), 2, 2)) == "valid_yes (edges=2, components=2)"


def test_diameter_examples():
    assert diameter(complete(5)) == 1
    assert diameter(path(4)) == 3
    assert diameter(disjoint_edges(2)) == math.inf


def test_bipartite_examples():
    sides = is_bipartite(cycle(4))
    assert sides is not None
    assert {frozenset(sides[0]), frozenset(sides[1])} == {frozenset({0, 2}), frozenset({1, 3})}
    assert is_bipartite(complete(3)) is None


def test_chordal_examples():
    assert is_chordal(cycle(4)) is None
    tree = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    order = is_chordal(tree)
    assert order is not None and is_perfect_elimination_order(tree, order)


def _has_odd_cycle(g):
    # brute force: some closed walk of odd length through an edge set would do, but checking
    # all vertex subsets for an induced odd cycle is simpler at this size
    for k in range(3, g.n + 1, 2):
        for vs in itertools.combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, vs)
            if all(sub.degree(v) == 2 for v in range(k)) and connected_components(sub).count == 1:
                return True
    return False


def _has_chordless_cycle(g):
    for k in range(4, g.n + 1):
        for vs in itertools.combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, vs)
            if all(sub.degree(v) == 2 for v in range(k)) and connected_components(sub).count == 1:
                return True
    return False


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_bipartite_and_chordal_agree_with_cycle_search(g):
    assert (is_bipartite(g) is None) == _has_odd_cycle(g)
    assert (is_chordal(g) is None) == _has_chordless_cycle(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_components_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert connected_components(g).count == nx.number_connected_components(h)
    if g.n:
        d = diameter(g)
        assert d == (nx.diameter(h) if nx.is_connected(h) else math.inf)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_induced_on_all_vertices_is_identity(g):
    sub, order = induced_subgraph(g, range(g.n))
    assert sub == g and order == list(range(g.n))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_verified_component_count_matches_induced_subgraph(g):
    m = Matching(nx.max_weight_matching(_nx(g), maxcardinality=True))
    verdict = verify_matching(g, m, 0, 0)
    assert verdict
    sub, _ = induced_subgraph(g, m.saturated)
    assert verdict.components == connected_components(sub).count == count_components_within(g, m.saturated)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
