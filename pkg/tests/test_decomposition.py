import pytest
from hypothesis import given, settings

from discmatch.decomposition import (
    Kind,
    NiceNode,
    NiceTreeDecomposition,
    TreeDecomposition,
    check_nice,
    min_degree_decomposition,
    nicify,
    validate_decomposition,
)
from discmatch.errors import InputError
from discmatch.graph import Graph
from helpers import graphs, path, random_graph


def test_path_decomposition_valid():
    td = TreeDecomposition.make([[0, 1], [1, 2], [2, 3]], [(0, 1), (1, 2)])
    assert validate_decomposition(path(4), td)
    assert td.width == 1


def test_edge_coverage_failure():
    td = TreeDecomposition.make([[0, 1], [1, 2], [2, 3]], [(0, 1), (1, 2)])
    g = Graph.from_edges(4, path(4).edges() + [(0, 3)])
    assert validate_decomposition(g, td).reason == "edge-coverage"


def test_single_bag():
    g = path(5)
    td = TreeDecomposition.make([range(5)], [])
    assert validate_decomposition(g, td) and td.width == 4


@pytest.mark.parametrize(
    "bags, edges, reason",
    [
        ([[0, 1], [1, 2]], [], "not-a-tree"),
        ([[0, 1], [1, 2], [2, 3]], [(0, 1), (1, 2), (0, 2)], "not-a-tree"),
        ([[0, 1], [1, 7]], [(0, 1)], "bad-vertex"),
        ([[0, 1], [1, 2]], [(0, 1)], "vertex-coverage"),
        ([[0, 1], [2, 3], [1, 2]], [(0, 1), (1, 2)], "connectivity"),
    ],
)
def test_failure_reasons(bags, edges, reason):
    assert validate_decomposition(path(4), TreeDecomposition.make(bags, edges)).reason == reason


def test_nicify_single_bag_chain():
    g = Graph.from_edges(2, [(0, 1)])
    ntd = nicify(TreeDecomposition.make([[0, 1]], []), g)
    kinds = [(nd.kind, nd.vertex) for nd in ntd.nodes]
    assert kinds == [
        (Kind.LEAF, None),
        (Kind.INTRODUCE, 0),
        (Kind.INTRODUCE, 1),
        (Kind.FORGET, 0),
        (Kind.FORGET, 1),
    ]
    assert ntd.nodes[ntd.root].bag == frozenset()


def test_nicify_join_bags_equal():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    td = TreeDecomposition.make([[0], [0, 1], [0, 2]], [(0, 1), (0, 2)])
    ntd = nicify(td, g)
    joins = [nd for nd in ntd.nodes if nd.kind is Kind.JOIN]
    assert joins
    for nd in joins:
        assert all(ntd.nodes[ch].bag == nd.bag for ch in nd.children)


def test_nicify_rejects_invalid():
    with pytest.raises(InputError):
        nicify(TreeDecomposition.make([[0, 1]], []), path(3))


def test_check_nice_rejects_bad_introduce():
    bad = NiceTreeDecomposition(
        (
            NiceNode(Kind.LEAF, frozenset()),
            NiceNode(Kind.INTRODUCE, frozenset({0, 1}), (0,), 0),
            NiceNode(Kind.FORGET, frozenset({1}), (1,), 0),
            NiceNode(Kind.FORGET, frozenset(), (2,), 1),
        )
    )
    with pytest.raises(InputError):
        check_nice(bad)


def test_width_preserved_on_random_decompositions(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.6))
        td = min_degree_decomposition(g)
        assert validate_decomposition(g, td)
        ntd = nicify(td, g)
        assert ntd.width == td.width
        assert validate_decomposition(g, ntd.as_tree_decomposition())
        assert len(ntd.nodes) <= 4 * (td.width + 2) * max(1, g.n) + 2 * len(td.bags)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_min_degree_is_valid(g):
    td = min_degree_decomposition(g)
    assert validate_decomposition(g, td)
    check_nice(nicify(td, g))
