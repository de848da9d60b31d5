"""One entry point over the four exact solvers, with the size guards the CLI exposes."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .decomposition import TreeDecomposition, nicify
from .errors import InputError, ResourceLimitError
from .graph import Graph
from .interval import IntervalModel, clique_path, interval_solve
from .oracle import DisconnectedOptimum, brute_force_disconnected
from .separators import DEFAULT_SEPARATOR_LIMIT, enumerate_minimal_separators, xp_solve
from .treewidth import tw_solve

log = logging.getLogger(__name__)

ALGORITHMS = ("auto", "brute", "separators", "interval", "treewidth")
DEFAULT_BRUTE_LIMIT = 18


@dataclass(frozen=True)
class Solution:
    optimum: DisconnectedOptimum
    algorithm: str


def solve(
    g: Graph,
    c: int,
    algo: str = "auto",
    td: TreeDecomposition | None = None,
    intervals: IntervalModel | None = None,
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
    separator_limit: int = DEFAULT_SEPARATOR_LIMIT,
) -> Solution:
    """Largest matching of ``g`` with at least ``c`` components.

    ``auto`` uses the interval DP when a model is given, the treewidth DP when
    a decomposition is given, then the separator solver if the separator
    family stays under ``separator_limit``, and brute force as a last resort.
    """
    if algo not in ALGORITHMS:
        raise InputError(f"unknown algorithm {algo!r}")
    if c < 1:
        raise InputError("c must be at least 1")
    if algo == "auto":
        if intervals is not None:
            algo = "interval"
        elif td is not None:
            algo = "treewidth"
        else:
            try:
                seps = enumerate_minimal_separators(g, separator_limit)
            except ResourceLimitError:
                log.info("separator family over %d, falling back to brute force", separator_limit)
                algo = "brute"
            else:
                log.info("auto: %d minimal separators", len(seps))
                return Solution(xp_solve(g, c, seps), "separators")
    log.info("solving with %s (n=%d, c=%d)", algo, g.n, c)
    if algo == "brute":
        if g.n > brute_limit:
            raise ResourceLimitError(f"brute force limited to {brute_limit} vertices, graph has {g.n}")
        return Solution(brute_force_disconnected(g, c), algo)
    if algo == "separators":
        return Solution(xp_solve(g, c, enumerate_minimal_separators(g, separator_limit)), algo)
    if algo == "interval":
        if intervals is None:
            raise InputError("the interval solver needs an interval model")
        return Solution(interval_solve(g, clique_path(intervals, g), c), algo)
    ntd = nicify(td, g) if td is not None else None
    return Solution(tw_solve(g, ntd, c), algo)
