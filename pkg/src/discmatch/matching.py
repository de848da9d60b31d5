"""Maximum matching (Edmonds' blossom method) and the connected-matching transform."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InputError, PreconditionError
from .graph import Graph, Matching, connected_components


@dataclass(frozen=True)
class MatchingResult:
    matching: Matching
    cardinality: int

    @classmethod
    def of(cls, m: Matching) -> "MatchingResult":
        return cls(m, len(m))


def _lca(base: list[int], match: list[int], parent: list[int], a: int, b: int) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _search(g: Graph, match: list[int], root: int) -> tuple[int, list[int]]:
    n = g.n
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in g.adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom
                cur = _lca(base, match, parent, v, to)
                blossom = [False] * n
                for a, b in ((v, to), (to, v)):
                    x = a
                    child = b
                    while base[x] != cur:
                        blossom[base[x]] = blossom[base[match[x]]] = True
                        parent[x] = child
                        child = match[x]
                        x = parent[match[x]]
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def _augment(match: list[int], parent: list[int], end: int) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        nxt = match[pv]
        match[v] = pv
        match[pv] = v
        v = nxt


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """True iff some free vertex roots an augmenting path, i.e. ``m`` is not maximum."""
    match = [-1] * g.n
    for u, v in m.edges:
        match[u] = v
        match[v] = u
    return any(match[r] == -1 and _search(g, match, r)[0] != -1 for r in range(g.n))


def maximum_matching(g: Graph) -> MatchingResult:
    """Maximum-cardinality matching of a general graph."""
    n = g.n
    match = [-1] * n
    # greedy start shortens the augmentation phase
    for v in range(n):
        if match[v] == -1:
            for u in g.adj[v]:
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _search(g, match, root)
        if end != -1:
            _augment(match, parent, end)
    result = Matching((v, match[v]) for v in range(n) if match[v] > v)
    if has_augmenting_path(g, result):
        raise AssertionError("blossom search left an augmenting path")
    return MatchingResult.of(result)


@dataclass(frozen=True)
class TraceStep:
    """State after one ``expand`` or ``try_to_connect`` call of :func:`connect_matching`."""

    step: str
    vertex: int
    C: tuple[int, ...]
    W: tuple[int, ...]
    Q_s: tuple[int, ...]
    Q_n: tuple[int, ...]
    M: frozenset[tuple[int, int]] = field(default_factory=frozenset)


def connect_matching(
    g: Graph, m: Matching, trace: list[TraceStep] | None = None, start: int | None = None
) -> Matching:
    """Rewire a maximum matching of a connected graph into a connected one of equal size.

    Grows a set ``C`` of saturated vertices inducing a connected subgraph.
    Saturated neighbors of ``C`` join directly; an unsaturated neighbor ``v``
    steals the mate of one of its neighbors ``w`` outside ``C`` by swapping
    ``uw`` for ``vw``.  The search starts at ``start`` (default: the
    lowest-index saturated vertex).  If ``trace`` is a list, a
    :class:`TraceStep` is appended after every procedure call.
    """
    if g.edge_count == 0:
        raise InputError("graph has no edges")
    if connected_components(g).count != 1:
        raise InputError("graph is not connected")
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge of the graph")
    if len(m) == 0:
        raise PreconditionError("empty matching is not maximum in a graph with edges", "not-maximum")

    mate = m.mate()
    target = 2 * len(m)
    if start is None:
        r = min(mate)
    elif start not in mate:
        raise InputError(f"start vertex {start} is not saturated")
    else:
        r = start
    in_c = {r}
    c_order = [r]
    w_set: dict[int, None] = {}  # insertion-ordered set
    q_s: deque[int] = deque([r])
    q_n: deque[int] = deque()

    def snap(step: str, v: int) -> None:
        if trace is not None:
            edges = frozenset((a, b) for a, b in mate.items() if a < b)
            trace.append(TraceStep(step, v, tuple(c_order), tuple(w_set), tuple(q_s), tuple(q_n), edges))

    def add_c(x: int) -> None:
        in_c.add(x)
        c_order.append(x)

    def expand(v: int) -> None:
        for w in g.adj[v]:
            if w in in_c:
                continue
            if w in mate:
                add_c(w)
                q_s.append(w)
            elif w not in w_set:
                w_set[w] = None
                q_n.append(w)

    def try_to_connect(v: int) -> None:
        for w in g.adj[v]:
            if w in in_c:
                continue
            if w not in mate:
                raise PreconditionError(f"edge ({v}, {w}) joins two free vertices; matching is not maximum", "not-maximum")
            u = mate.pop(w)
            del mate[u]
            mate[v] = w
            mate[w] = v
            add_c(v)
            add_c(w)
            w_set.pop(v, None)
            q_s.append(v)
            q_s.append(w)
            return

    while len(in_c) < target:
        before = len(in_c)
        while q_s:
            v = q_s.popleft()
            expand(v)
            snap("expand", v)
        while q_n:
            v = q_n.popleft()
            try_to_connect(v)
            snap("try_to_connect", v)
        if len(in_c) == before:
            raise PreconditionError("expansion stalled before covering the matching; input is not maximum", "not-maximum")
    return Matching((a, b) for a, b in mate.items() if a < b)


def maximum_connected_matching(g: Graph) -> Matching:
    return connect_matching(g, maximum_matching(g).matching)
