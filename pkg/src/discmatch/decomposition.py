"""Tree decompositions: validation, a min-degree heuristic, and conversion to nice form."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed ``0..N-1`` with undirected tree edges between bag ids."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, bags: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]]) -> "TreeDecomposition":
        return cls(
            tuple(frozenset(b) for b in bags),
            tuple(sorted((min(a, b), max(a, b)) for a, b in edges)),
        )

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.edges:
            out[a].append(b)
            out[b].append(a)
        return out


@dataclass(frozen=True)
class TDVerdict:
    ok: bool
    reason: str | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_decomposition(g: Graph, td: TreeDecomposition) -> TDVerdict:
    """Check tree shape, vertex coverage, edge coverage and connected vertex traces."""
    nb = len(td.bags)
    if nb == 0:
        return TDVerdict(False, "not-a-tree", "no bags")
    for a, b in td.edges:
        if not (0 <= a < nb and 0 <= b < nb) or a == b:
            return TDVerdict(False, "not-a-tree", f"bad tree edge ({a}, {b})")
    if len(set(td.edges)) != len(td.edges) or len(td.edges) != nb - 1:
        return TDVerdict(False, "not-a-tree", f"{len(td.edges)} edges for {nb} bags")
    adj = td.neighbors()
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != nb:
        return TDVerdict(False, "not-a-tree", "tree is disconnected")
    holders: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return TDVerdict(False, "bad-vertex", f"bag {i} holds unknown vertex {v}")
            holders.setdefault(v, []).append(i)
    for v in range(g.n):
        if v not in holders:
            return TDVerdict(False, "vertex-coverage", f"vertex {v} is in no bag")
    for u, v in g.edges():
        if not any(v in td.bags[i] for i in holders[u]):
            return TDVerdict(False, "edge-coverage", f"edge ({u}, {v}) is in no bag")
    for v, ids in holders.items():
        want = set(ids)
        reach = {ids[0]}
        stack = [ids[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in want and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != want:
            return TDVerdict(False, "connectivity", f"bags holding vertex {v} are not connected")
    return TDVerdict(True)


def min_degree_decomposition(g: Graph) -> TreeDecomposition:
    """Decomposition from a min-degree elimination ordering (ties by smallest index)."""
    if g.n == 0:
        return TreeDecomposition((frozenset(),), ())
    nbrs = [set(row) for row in g.adj]
    alive = set(range(g.n))
    order: list[int] = []
    bag_of: dict[int, frozenset[int]] = {}
    for _ in range(g.n):
        v = min(alive, key=lambda u: (len(nbrs[u]), u))
        nb = nbrs[v]
        bag_of[v] = frozenset(nb | {v})
        for a in nb:
            nbrs[a] |= nb - {a}
            nbrs[a].discard(v)
        alive.discard(v)
        order.append(v)
        nbrs[v] = set()
    pos = {v: i for i, v in enumerate(order)}
    bags = [bag_of[v] for v in order]
    edges = []
    roots = []
    for i, v in enumerate(order):
        later = [u for u in bags[i] if u != v]
        if later:
            edges.append((i, pos[min(later, key=pos.__getitem__)]))
        else:
            roots.append(i)
    # forest to tree: chain the roots, no vertex is shared so traces stay connected
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition.make(bags, edges)


class Kind(str, Enum):
    LEAF = "leaf"
    INTRODUCE = "introduce"
    FORGET = "forget"
    JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    kind: Kind
    bag: frozenset[int]
    children: tuple[int, ...] = ()
    vertex: int | None = None


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Nodes listed children-first, so the last node is the (empty) root."""

    nodes: tuple[NiceNode, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max(len(nd.bag) for nd in self.nodes) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(i, ch) for i, nd in enumerate(self.nodes) for ch in nd.children]
        return TreeDecomposition.make([nd.bag for nd in self.nodes], edges)


def check_nice(ntd: NiceTreeDecomposition) -> None:
    """Raise :class:`InputError` if any node breaks the kind rules."""
    nodes = ntd.nodes
    if nodes[ntd.root].bag:
        raise InputError("root bag is not empty")
    for i, nd in enumerate(nodes):
        if any(ch >= i for ch in nd.children):
            raise InputError(f"node {i} has a child listed after it")
        kids = [nodes[ch].bag for ch in nd.children]
        if nd.kind is Kind.LEAF:
            ok = not kids and not nd.bag
        elif nd.kind is Kind.INTRODUCE:
            ok = len(kids) == 1 and nd.vertex not in kids[0] and nd.bag == kids[0] | {nd.vertex}
        elif nd.kind is Kind.FORGET:
            ok = len(kids) == 1 and nd.vertex in kids[0] and nd.bag == kids[0] - {nd.vertex}
        else:
            ok = len(kids) == 2 and kids[0] == kids[1] == nd.bag
        if not ok:
            raise InputError(f"node {i} violates the {nd.kind.value} rule")


def nicify(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Convert to nice form without increasing width; rooted at bag 0, ending in an empty bag."""
    if g is not None:
        verdict = validate_decomposition(g, td)
        if not verdict:
            raise InputError(f"invalid tree decomposition: {verdict.message}")
    nodes: list[NiceNode] = []

    def push(node: NiceNode) -> int:
        nodes.append(node)
        return len(nodes) - 1

    def morph(top: int, target: frozenset[int]) -> int:
        bag = nodes[top].bag
        for v in sorted(bag - target):
            bag = bag - {v}
            top = push(NiceNode(Kind.FORGET, bag, (top,), v))
        for v in sorted(target - bag):
            bag = bag | {v}
            top = push(NiceNode(Kind.INTRODUCE, bag, (top,), v))
        return top

    adj = td.neighbors()
    parent = {0: -1}
    order = [0]
    for x in order:
        for y in sorted(adj[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
    children: dict[int, list[int]] = {x: [] for x in order}
    for x in order[1:]:
        children[parent[x]].append(x)

    top_of: dict[int, int] = {}
    for x in reversed(order):
        bag = td.bags[x]
        tops = [morph(top_of[ch], bag) for ch in children[x]]
        if not tops:
            tops = [morph(push(NiceNode(Kind.LEAF, frozenset())), bag)]
        cur = tops[0]
        for other in tops[1:]:
            cur = push(NiceNode(Kind.JOIN, bag, (cur, other)))
        top_of[x] = cur
    morph(top_of[0], frozenset())
    ntd = NiceTreeDecomposition(tuple(nodes))
    check_nice(ntd)
    return ntd
