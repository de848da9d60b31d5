"""Exhaustive ground-truth solvers for small graphs.

Both searches walk matchings as increasing sequences of edge indices (edges
sorted lexicographically), so the first optimum met is the lexicographically
smallest one.  That makes witnesses reproducible across runs.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, Matching, mask_components
from .matching import MatchingResult


@dataclass(frozen=True)
class DisconnectedOptimum:
    """Largest matching with at least ``c`` components; ``value`` is ``None`` when none exists."""

    value: int | None
    witness: Matching | None
    c: int

    @property
    def feasible(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "infeasible" if self.value is None else str(self.value)


INFEASIBLE = None


def _popcount(x: int) -> int:
    return bin(x).count("1")


def brute_force_disconnected(g: Graph, c: int) -> DisconnectedOptimum:
    """Exact maximum ``c``-disconnected matching by backtracking over edges.

    Branches are cut when the current size plus the number of edges that could
    still be added cannot beat the incumbent, or when even one new component
    per added edge cannot reach ``c``.
    """
    if c < 0:
        raise ValueError("c must be non-negative")
    edges = g.edges()
    masks = g.masks
    ends = [(1 << u) | (1 << v) for u, v in edges]
    n_edges = len(edges)
    # suffix union of endpoints of edges j.. for the free-vertex bound
    suffix = [0] * (n_edges + 1)
    for j in range(n_edges - 1, -1, -1):
        suffix[j] = suffix[j + 1] | ends[j]

    best = -1
    best_set: list[int] = []
    chosen: list[int] = []

    def rec(start: int, used: int, comps: int) -> None:
        nonlocal best, best_set
        size = len(chosen)
        if size > best and comps >= c:
            best = size
            best_set = chosen[:]
        free = suffix[start] & ~used
        room = _popcount(free) // 2
        if size + room <= best or comps + room < c:
            return
        for j in range(start, n_edges):
            e = ends[j]
            if used & e:
                continue
            free = suffix[j] & ~used
            room = _popcount(free) // 2
            if size + room <= best or comps + room < c:
                return
            chosen.append(j)
            new_used = used | e
            rec(j + 1, new_used, mask_components(masks, new_used))
            chosen.pop()

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 100))
    try:
        rec(0, 0, 0)
    finally:
        sys.setrecursionlimit(limit)
    if best < 0:
        return DisconnectedOptimum(None, None, c)
    return DisconnectedOptimum(best, Matching(edges[j] for j in best_set), c)


def brute_force_induced(g: Graph) -> MatchingResult:
    """Maximum induced matching: every saturated vertex has exactly one saturated neighbor."""
    edges = g.edges()
    masks = g.masks
    ends = [(1 << u) | (1 << v) for u, v in edges]
    closed = [ends[j] | masks[u] | masks[v] for j, (u, v) in enumerate(edges)]
    n_edges = len(edges)
    suffix = [0] * (n_edges + 1)
    for j in range(n_edges - 1, -1, -1):
        suffix[j] = suffix[j + 1] | ends[j]

    best = 0
    best_set: list[int] = []
    chosen: list[int] = []

    def rec(start: int, blocked: int) -> None:
        nonlocal best, best_set
        size = len(chosen)
        if size > best:
            best = size
            best_set = chosen[:]
        for j in range(start, n_edges):
            if blocked & ends[j]:
                continue
            if size + _popcount(suffix[j] & ~blocked) // 2 <= best:
                return
            chosen.append(j)
            rec(j + 1, blocked | closed[j])
            chosen.pop()

    rec(0, 0)
    return MatchingResult.of(Matching(edges[j] for j in best_set))


def subset_profile(g: Graph) -> dict[int, int]:
    """Map ``c -> beta_dc`` for every feasible ``c >= 1``, via perfect-matchability of vertex subsets.

    Independent of the edge backtracking above: a vertex set ``S`` is the
    saturated set of some matching iff ``G[S]`` has a perfect matching, and
    that matching then has ``|S|/2`` edges and the components of ``G[S]``.
    Costs ``O(2^n n)``; intended for cross-checking on ``n <= 16``.
    """
    n = g.n
    masks = g.masks
    pm = bytearray(1 << n)
    pm[0] = 1
    best_by_comp: dict[int, int] = {}
    for s in range(1, 1 << n):
        if _popcount(s) & 1:
            continue
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        cand = masks[v] & rest
        while cand:
            b = cand & -cand
            cand ^= b
            if pm[rest ^ b]:
                pm[s] = 1
                break
        if pm[s]:
            k = mask_components(masks, s)
            size = _popcount(s) // 2
            if best_by_comp.get(k, -1) < size:
                best_by_comp[k] = size
    profile: dict[int, int] = {}
    running = -1
    for k in sorted(best_by_comp, reverse=True):
        running = max(running, best_by_comp[k])
        profile[k] = running
    # fill gaps: beta_dc for c between recorded component counts
    out: dict[int, int] = {}
    top = max(profile, default=0)
    for c in range(1, top + 1):
        out[c] = max(v for k, v in profile.items() if k >= c)
    return out
