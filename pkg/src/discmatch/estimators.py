"""scikit-learn style wrappers: configure with parameters, ``fit`` on a graph, read results from ``*_`` attributes."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_choice, check_count, check_graph
from .errors import InputError, ResourceLimitError
from .graph import Graph, Matching, connected_components, induced_subgraph
from .matching import maximum_connected_matching, maximum_matching
from .oracle import brute_force_induced
from .separators import DEFAULT_SEPARATOR_LIMIT
from .solvers import ALGORITHMS, DEFAULT_BRUTE_LIMIT, solve


def component_labels(g: Graph, m: Matching) -> np.ndarray:
    """Component id in ``G[V(m)]`` per vertex, ``-1`` for unsaturated vertices."""
    out = np.full(g.n, -1, dtype=int)
    sub, order = induced_subgraph(g, sorted(m.saturated))
    labels = connected_components(sub).label
    for i, v in enumerate(order):
        out[v] = labels[i]
    return out


class _MatchingEstimator(TransformerMixin, BaseEstimator):
    def _store(self, g: Graph, m: Matching | None) -> None:
        self.graph_ = g
        self.n_vertices_ = g.n
        self.matching_ = m
        self.size_ = None if m is None else len(m)

    def transform(self, X):
        """Component label of every vertex under the fitted matching (``-1`` if unsaturated).

        ``X`` must describe the fitted graph; ``None`` reuses it.
        """
        check_is_fitted(self, "matching_")
        if X is not None and check_graph(X, self.n_vertices_) != self.graph_:
            raise InputError("transform expects the graph the estimator was fitted on")
        if self.matching_ is None:
            return np.full(self.n_vertices_, -1, dtype=int)
        return component_labels(self.graph_, self.matching_)


class DisconnectedMatching(_MatchingEstimator):
    """Largest matching whose saturated vertices induce at least ``c`` components.

    ``size_`` is ``None`` when no such matching exists.
    """

    def __init__(self, c=2, algo="auto", brute_limit=DEFAULT_BRUTE_LIMIT, separator_limit=DEFAULT_SEPARATOR_LIMIT):
        self.c = c
        self.algo = algo
        self.brute_limit = brute_limit
        self.separator_limit = separator_limit

    def fit(self, X, y=None, tree_decomposition=None, intervals=None):
        c = check_count(self.c, "c", 1)
        algo = check_choice(self.algo, "algo", ALGORITHMS)
        g = check_graph(X)
        sol = solve(
            g,
            c,
            algo,
            tree_decomposition,
            intervals,
            check_count(self.brute_limit, "brute_limit", 0),
            check_count(self.separator_limit, "separator_limit", 0),
        )
        self.algorithm_ = sol.algorithm
        self._store(g, sol.optimum.witness)
        return self


class ConnectedMatching(_MatchingEstimator):
    """Maximum matching rearranged so its saturated vertices induce a connected subgraph."""

    def fit(self, X, y=None):
        g = check_graph(X)
        self.maximum_size_ = maximum_matching(g).cardinality
        self._store(g, maximum_connected_matching(g) if g.edge_count else Matching())
        return self


class InducedMatching(_MatchingEstimator):
    """Maximum induced matching by exhaustive search, guarded by ``brute_limit`` vertices."""

    def __init__(self, brute_limit=DEFAULT_BRUTE_LIMIT):
        self.brute_limit = brute_limit

    def fit(self, X, y=None):
        g = check_graph(X)
        limit = check_count(self.brute_limit, "brute_limit", 0)
        if g.n > limit:
            raise ResourceLimitError(f"brute force limited to {limit} vertices, graph has {g.n}")
        self._store(g, brute_force_induced(g).matching)
        return self
