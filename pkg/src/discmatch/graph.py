"""Simple undirected graphs, matchings and the structural checks used throughout.

Vertices are dense integers ``0..n-1``.  Both :class:`Graph` and
:class:`Matching` are immutable and hashable, so they can be shared freely
between solver calls and used as cache keys.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InputError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "edge_count", "_masks", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise InputError(f"adjacency has {len(adj)} rows for n={n}")
        rows = []
        for v, nbrs in enumerate(adj):
            row = tuple(sorted(set(nbrs)))
            if row and (row[0] < 0 or row[-1] >= n):
                raise InputError(f"neighbor of {v} out of range 0..{n - 1}")
            if v in row:
                raise InputError(f"self-loop at vertex {v}")
            rows.append(row)
        total = 0
        for v, row in enumerate(rows):
            for u in row:
                if v not in rows[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
            total += len(row)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(rows)
        self.edge_count = total // 2
        self._masks: tuple[int, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an edge list; duplicate edges and self-loops are rejected."""
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(row) and row[lo] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set iff ``u`` is a neighbor)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in row) for row in self.adj)
        return self._masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class Matching:
    """A set of vertex-disjoint edges.  Membership in a host graph is checked separately."""

    __slots__ = ("edges", "saturated")

    def __init__(self, edges: Iterable[Edge] = ()):
        normed = set()
        seen: set[int] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"degenerate edge ({u}, {v})")
            e = _norm(u, v)
            if e in normed:
                continue
            if u in seen or v in seen:
                raise InputError(f"edge {e} shares an endpoint with another edge")
            seen.update(e)
            normed.add(e)
        self.edges: frozenset[Edge] = frozenset(normed)
        self.saturated: frozenset[int] = frozenset(seen)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __contains__(self, edge: Edge) -> bool:
        return _norm(*edge) in self.edges

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({sorted(self.edges)})"


@dataclass(frozen=True)
class ComponentLabeling:
    label: tuple[int, ...]
    count: int

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.label):
            out[c].append(v)
        return out


def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    out = sorted(set(vs))
    if out and (out[0] < 0 or out[-1] >= g.n):
        raise InputError(f"vertex id out of range 0..{g.n - 1}")
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[vs], order)`` where ``order[i]`` is the original id of new vertex ``i``."""
    order = _check_vertices(g, vs)
    index = {v: i for i, v in enumerate(order)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in order]
    return Graph(len(order), adj), order


def connected_components(g: Graph) -> ComponentLabeling:
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if label[u] == -1:
                    label[u] = count
                    queue.append(u)
        count += 1
    return ComponentLabeling(tuple(label), count)


def count_components_within(g: Graph, vs: Iterable[int]) -> int:
    """Number of connected components of ``G[vs]`` without building the subgraph."""
    members = set(vs)
    seen: set[int] = set()
    count = 0
    for s in members:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u in members and u not in seen:
                    seen.add(u)
                    stack.append(u)
    return count


def mask_components(masks: Sequence[int], subset: int) -> int:
    """Component count of the subgraph induced by bitmask ``subset``."""
    count = 0
    rest = subset
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & subset & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        count += 1
    return count


class Failure(str, Enum):
    NOT_A_MATCHING = "not-a-matching"
    TOO_FEW_EDGES = "too-few-edges"
    TOO_FEW_COMPONENTS = "too-few-components"


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_matching`; ``reason`` is ``None`` exactly when ``ok``."""

    ok: bool
    reason: Failure | None = None
    message: str = ""
    edges: int = 0
    components: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"valid_yes (edges={self.edges}, components={self.components})"
        return f"fails({self.reason.value}): {self.message}"


def verify_matching(g: Graph, m: Matching | Iterable[Edge], k: int, c: int) -> Verdict:
    """Check that ``m`` is a matching of ``g`` with ``|m| >= k`` and ``G[V(m)]`` having ``>= c`` components."""
    if not isinstance(m, Matching):
        try:
            m = Matching(m)
        except InputError as exc:
            return Verdict(False, Failure.NOT_A_MATCHING, str(exc))
    for u, v in sorted(m.edges):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return Verdict(False, Failure.NOT_A_MATCHING, f"({u}, {v}) is not an edge of the graph")
    comps = count_components_within(g, m.saturated)
    if len(m) < k:
        return Verdict(False, Failure.TOO_FEW_EDGES, f"{len(m)} edges < k={k}", len(m), comps)
    if comps < c:
        return Verdict(False, Failure.TOO_FEW_COMPONENTS, f"{comps} components < c={c}", len(m), comps)
    return Verdict(True, None, "", len(m), comps)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` for disconnected graphs, 0 for n <= 1."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return a bipartition ``(side0, side1)`` or ``None`` if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    return side0, frozenset(range(g.n)) - side0


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum-cardinality search (ties broken by smallest index)."""
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                weight[u] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.n:
        return False
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        parent_nbrs = set(g.adj[parent])
        if any(u != parent and u not in parent_nbrs for u in later):
            return False
    return True


def is_chordal(g: Graph) -> list[int] | None:
    """Perfect elimination order (reverse MCS order) when ``g`` is chordal, else ``None``."""
    order = maximum_cardinality_search(g)[::-1]
    return order if is_perfect_elimination_order(g, order) else None
