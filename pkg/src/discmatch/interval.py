"""Interval models, their clique paths, and the polynomial c-disconnected matching DP.

With the maximal cliques ``Q_1..Q_p`` ordered along the line and
``S_i = Q_i ∩ Q_{i-1}`` (``S_1 = S_{p+1} = ∅``), let ``G_ij`` be the graph
induced by ``Q_i ∪ ... ∪ Q_j`` minus ``S_i ∪ S_{j+1}``.  Table entry
``f(i, j, c)`` is the largest matching of ``G_ij`` with at least ``c``
components.  Removing ``S_{l+1}`` splits ``G_ij`` into the non-adjacent parts
``G_il`` and ``G_{l+1,j}``, which is what the recurrence combines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graph import Graph, Matching, induced_subgraph
from .matching import maximum_matching
from .oracle import DisconnectedOptimum

NEG = float("-inf")


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer intervals, one per vertex; touching endpoints intersect."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for v, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise InputError(f"interval of vertex {v} has left {lo} > right {hi}")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        iv = self.intervals
        edges = [
            (u, v)
            for u in range(len(iv))
            for v in range(u + 1, len(iv))
            if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
        ]
        return Graph.from_edges(len(iv), edges)

    def check(self, g: Graph) -> None:
        if self.n != g.n or self.graph() != g:
            raise InputError("interval model does not match the graph")


@dataclass(frozen=True)
class CliquePath:
    cliques: tuple[frozenset[int], ...]

    @property
    def p(self) -> int:
        return len(self.cliques)

    def separator(self, i: int) -> frozenset[int]:
        """``S_i`` for 1-based ``i`` in ``1..p+1``."""
        if i <= 1 or i > self.p:
            return frozenset()
        return self.cliques[i - 1] & self.cliques[i - 2]


def validate_clique_path(g: Graph, path: CliquePath) -> None:
    """Raise :class:`InputError` unless ``path`` is a consecutive ordering of all maximal cliques of ``g``."""
    cliques = path.cliques
    for q in cliques:
        for u in q:
            if u < 0 or u >= g.n:
                raise InputError(f"vertex {u} out of range")
            for v in q:
                if u < v and not g.has_edge(u, v):
                    raise InputError(f"clique contains non-adjacent pair ({u}, {v})")
        # maximal: no outside vertex adjacent to all of q
        common = None
        for u in q:
            nb = set(g.adj[u])
            common = nb if common is None else common & nb
        if common and common - q:
            raise InputError(f"clique {sorted(q)} is not maximal")
    if len(set(cliques)) != len(cliques):
        raise InputError("repeated clique")
    runs: dict[int, list[int]] = {}
    for idx, q in enumerate(cliques):
        for v in q:
            runs.setdefault(v, []).append(idx)
    if len(runs) != g.n:
        raise InputError("cliques do not cover every vertex")
    for v, idxs in runs.items():
        if idxs[-1] - idxs[0] + 1 != len(idxs):
            raise InputError(f"vertex {v} does not occur in consecutive cliques")
    for u, v in g.edges():
        if not any(u in q and v in q for q in cliques):
            raise InputError(f"edge ({u}, {v}) not inside any clique")


def clique_path(model: IntervalModel, g: Graph | None = None) -> CliquePath:
    """Maximal cliques in left-to-right order, read off an endpoint sweep."""
    if g is None:
        g = model.graph()
    else:
        model.check(g)
    events = []
    for v, (lo, hi) in enumerate(model.intervals):
        events.append((lo, 0, v))
        events.append((hi, 1, v))
    events.sort()
    open_set: set[int] = set()
    grown = False
    cliques: list[frozenset[int]] = []
    for _, kind, v in events:
        if kind == 0:
            open_set.add(v)
            grown = True
        else:
            if grown:
                cliques.append(frozenset(open_set))
                grown = False
            open_set.discard(v)
    path = CliquePath(tuple(cliques))
    validate_clique_path(g, path)
    return path


def interval_solve(g: Graph, path: CliquePath, c: int) -> DisconnectedOptimum:
    """Largest matching of ``g`` whose saturated vertices induce at least ``c`` components.

    ``f(i, j, 0)`` is the maximum matching size of ``G_ij`` (the empty matching
    counts).  ``f(i, j, 1)`` equals it only when ``G_ij`` has an edge, since an
    empty matching has no component.  For ``c' >= 2`` a single clique is
    hopeless and otherwise the best split ``f(i, l, c1) + f(l+1, j, c' - c1)``
    over ``i <= l < j`` and ``0 <= c1 <= c'`` is taken.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    validate_clique_path(g, path)
    p = path.p
    if p == 0:
        return DisconnectedOptimum(None, None, c)
    cliques = path.cliques
    seps = [path.separator(i) for i in range(p + 2)]  # seps[i] = S_i, 1-based

    beta: dict[tuple[int, int], Matching] = {}
    for i in range(1, p + 1):
        acc: set[int] = set()
        for j in range(i, p + 1):
            acc |= cliques[j - 1]
            keep = acc - seps[i] - seps[j + 1]
            sub, order = induced_subgraph(g, keep)
            mm = maximum_matching(sub).matching
            beta[i, j] = Matching((order[u], order[v]) for u, v in mm.edges)

    f: dict[tuple[int, int, int], float] = {}
    choice: dict[tuple[int, int, int], tuple[int, int] | None] = {}
    for length in range(p):
        for i in range(1, p - length + 1):
            j = i + length
            size = len(beta[i, j])
            f[i, j, 0] = size
            choice[i, j, 0] = None
            f[i, j, 1] = size if size > 0 else NEG
            choice[i, j, 1] = None
            for cc in range(2, c + 1):
                best, arg = NEG, None
                if i < j:
                    for ell in range(i, j):
                        for c1 in range(cc + 1):
                            val = f[i, ell, c1] + f[ell + 1, j, cc - c1]
                            if val > best:
                                best, arg = val, (ell, c1)
                f[i, j, cc] = best
                choice[i, j, cc] = arg

    top = f[1, p, c]
    if top == NEG:
        return DisconnectedOptimum(None, None, c)

    edges: list[tuple[int, int]] = []
    stack = [(1, p, c)]
    while stack:
        i, j, cc = stack.pop()
        arg = choice[i, j, cc]
        if arg is None:
            edges.extend(beta[i, j].edges)
        else:
            ell, c1 = arg
            stack.append((i, ell, c1))
            stack.append((ell + 1, j, cc - c1))
    witness = Matching(edges)
    return DisconnectedOptimum(int(top), witness, c)


def random_interval_model(n: int, rng, span: int | None = None, max_len: int | None = None) -> IntervalModel:
    """Random integer intervals; ``rng`` is a :class:`random.Random`."""
    span = span if span is not None else 2 * n + 2
    max_len = max_len if max_len is not None else max(1, span // 3)
    out = []
    for _ in range(n):
        lo = rng.randint(0, span)
        out.append((lo, lo + rng.randint(0, max_len)))
    return IntervalModel(tuple(out))


def model_from_pairs(pairs: Sequence[tuple[int, int]]) -> IntervalModel:
    return IntervalModel(tuple((int(a), int(b)) for a, b in pairs))
