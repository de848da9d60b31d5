import pytest

from discmatch.decomposition import TreeDecomposition, min_degree_decomposition, nicify
from discmatch.errors import InputError
from discmatch.graph import Graph, verify_matching
from discmatch.matching import maximum_matching
from discmatch.oracle import brute_force_disconnected, brute_force_induced
from discmatch.partitions import bell
from discmatch.treewidth import TreewidthSolver, state_bound, tw_solve
from helpers import complete, partial_ktree, path, random_graph


def spider():
    # centre 0, legs 0-1-2, 0-3-4, 0-5-6
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def test_spider_three_components():
    res = tw_solve(spider(), c=3)
    assert res.value == 3 == brute_force_disconnected(spider(), 3).value
    assert sorted(res.witness) == [(1, 2), (3, 4), (5, 6)]


def test_path_with_path_decomposition():
    td = TreeDecomposition.make([[0, 1], [1, 2], [2, 3], [3, 4]], [(0, 1), (1, 2), (2, 3)])
    assert tw_solve(path(5), nicify(td, path(5)), 2).value == 2


def test_clique_infeasible():
    td = TreeDecomposition.make([range(4)], [])
    assert not tw_solve(complete(4), nicify(td), 2).feasible


def test_decomposition_must_fit():
    td = TreeDecomposition.make([[0, 1], [1, 2]], [(0, 1)])
    with pytest.raises(InputError):
        TreewidthSolver(path(4), nicify(td), 1)


def test_oracle_equivalence(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.6))
        ntd = nicify(min_degree_decomposition(g), g)
        star = brute_force_induced(g).cardinality
        for c in range(1, star + 2):
            solver = TreewidthSolver(g, ntd, c)
            got = solver.result()
            assert got.value == brute_force_disconnected(g, c).value
            if got.feasible:
                assert verify_matching(g, got.witness, got.value, c)
            assert solver.max_states <= state_bound(ntd.width, c)
        if star:
            assert tw_solve(g, ntd, 1).value == maximum_matching(g).cardinality


def test_state_bound_formula():
    assert state_bound(0, 1) == 4 * 1 * 2
    assert state_bound(2, 3) == 4**3 * bell(3) * 4


def test_four_role_bound_holds_on_partial_ktrees(rng):
    for _ in range(40):
        g, td = partial_ktree(rng, rng.randint(5, 12), k=rng.randint(1, 3))
        ntd = nicify(td, g)
        for c in (1, 2, 3):
            assert TreewidthSolver(g, ntd, c).max_states <= state_bound(ntd.width, c)


def test_two_role_count_is_exceeded_on_a_tree():
    """Counting only S and U per bag vertex (2^{2t}) undercounts: a bag vertex may also be
    saturated by an already forgotten partner.  This tree of width 1 stores 17 > 16 states."""
    g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 4), (1, 6), (2, 3), (3, 5)])
    ntd = nicify(min_degree_decomposition(g), g)
    assert ntd.width == 1
    solver = TreewidthSolver(g, ntd, 1)
    assert solver.max_states > 2 ** (2 * 1) * bell(2) * 2
    assert solver.max_states <= state_bound(1, 1)
