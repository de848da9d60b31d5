"""Input coercion shared by the estimator facade."""

from __future__ import annotations

from numbers import Integral

import numpy as np

from .errors import InputError
from .graph import Graph


def check_graph(X, n_vertices: int | None = None) -> Graph:
    """Accept a :class:`Graph`, a square symmetric 0/1 adjacency array, or an edge list.

    Edge lists need ``n_vertices`` unless every vertex appears in some edge.
    """
    if isinstance(X, Graph):
        return X
    # square arrays are always read as adjacency matrices, lists as edge lists
    if isinstance(X, np.ndarray) and X.ndim == 2 and X.shape[0] == X.shape[1]:
        return _from_matrix(X)
    try:
        pairs = [tuple(int(x) for x in e) for e in X]
    except (TypeError, ValueError):
        raise InputError("expected a Graph, an adjacency matrix or a list of edges") from None
    if any(len(p) != 2 for p in pairs):
        raise InputError("edges must be pairs of vertex ids")
    n = n_vertices if n_vertices is not None else 1 + max((max(p) for p in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def _from_matrix(A: np.ndarray) -> Graph:
    if not np.array_equal(A, A.T):
        raise InputError("adjacency matrix is not symmetric")
    if np.any(np.diag(A)):
        raise InputError("adjacency matrix has self-loops")
    if not np.isin(A, (0, 1)).all():
        raise InputError("adjacency matrix must hold only 0 and 1")
    us, vs = np.nonzero(np.triu(A, 1))
    return Graph.from_edges(A.shape[0], zip(us.tolist(), vs.tolist()))


def check_count(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise InputError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InputError(f"{name} must be at least {minimum}, got {value}")
    return int(value)


def check_choice(value, name: str, choices) -> str:
    if value not in choices:
        raise InputError(f"{name} must be one of {tuple(choices)}, got {value!r}")
    return value
