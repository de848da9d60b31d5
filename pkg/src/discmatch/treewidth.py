"""Dynamic program over a nice tree decomposition for the c-disconnected matching problem.

A state ``(S, U, gamma, ell)`` at node ``x`` describes a partial matching
``M`` of the subgraph built so far:

* ``gamma`` partitions the saturated bag vertices; two of them share a block
  iff they lie in one component of ``G[V(M)]``.  Bag vertices outside
  ``gamma`` are unsaturated for good.
* ``S`` are bag vertices matched to other bag vertices, ``U`` are bag
  vertices whose partner has not been introduced yet.  The rest of ``gamma``
  is matched to forgotten vertices.
* ``ell`` counts components with no vertex left in the bag, capped at ``c``.

The stored value is the number of matching edges with at least one forgotten
endpoint.  Tables are filled forward, from each child state to the parent
states it can produce, and each stored entry keeps a back-pointer so a
witness can be rebuilt from the root.
"""

from __future__ import annotations

from typing import Iterator

from .decomposition import (
    Kind,
    NiceTreeDecomposition,
    check_nice,
    min_degree_decomposition,
    nicify,
    validate_decomposition,
)
from .errors import InputError
from .graph import Graph, Matching
from .oracle import DisconnectedOptimum
from .partitions import Partition, bell, block_of, canonical, join, merge_into

State = tuple[int, int, Partition, int]
# value, then back-pointer: (child_state,) / (child_state, edge) / (state_y, state_z)
Entry = tuple[int, tuple]


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _put(table: dict[State, Entry], state: State, value: int, back: tuple) -> None:
    old = table.get(state)
    if old is None or value > old[0]:
        table[state] = (value, back)


def _introduce(child: dict[State, Entry], v: int, nbr: int) -> dict[State, Entry]:
    out: dict[State, Entry] = {}
    vbit = 1 << v
    for st, (val, _) in child.items():
        s, u, gamma, ell = st
        # v stays unsaturated
        _put(out, st, val, (st,))
        fused = merge_into(gamma, v, nbr)
        # v waits for a partner introduced later
        _put(out, (s, u | vbit, fused, ell), val, (st,))
        # v takes a waiting neighbor as partner
        for w in _bits(u & nbr):
            wbit = 1 << w
            _put(out, (s | vbit | wbit, u & ~wbit, fused, ell), val, (st,))
    return out


def _drop_from_block(gamma: Partition, v: int) -> tuple[Partition, bool]:
    """Remove ``v``; the flag says whether its block vanished."""
    vbit = 1 << v
    own = block_of(gamma, v)
    rest = own & ~vbit
    blocks = [b for b in gamma if b != own]
    if rest:
        blocks.append(rest)
    return canonical(blocks), not rest


def _forget(child: dict[State, Entry], v: int, nbr: int, c: int) -> dict[State, Entry]:
    out: dict[State, Entry] = {}
    vbit = 1 << v
    for st, (val, _) in child.items():
        s, u, gamma, ell = st
        if not any(b & vbit for b in gamma):
            _put(out, st, val, (st,))
            continue
        if u & vbit:
            continue
        if s & vbit:
            gamma2, _ = _drop_from_block(gamma, v)
            for w in _bits(s & nbr & ~vbit):
                rest = s & ~vbit & ~(1 << w)
                _put(out, (rest, u, gamma2, ell), val + 1, (st, (min(v, w), max(v, w))))
            continue
        gamma2, closed = _drop_from_block(gamma, v)
        _put(out, (s, u, gamma2, min(c, ell + 1) if closed else ell), val, (st,))
    return out


def _join(left: dict[State, Entry], right: dict[State, Entry], c: int) -> dict[State, Entry]:
    out: dict[State, Entry] = {}
    groups: dict[tuple[int, int], list[State]] = {}
    for st in right:
        s, u, gamma, _ = st
        groups.setdefault((s, sum(gamma)), []).append(st)
    for sy in left:
        s, uy, gy, ly = sy
        area = sum(gy)
        need = area & ~s
        for sz in groups.get((s, area), ()):
            _, uz, gz, lz = sz
            if uy | uz != need:
                continue
            value = left[sy][0] + right[sz][0]
            _put(out, (s, uy & uz, join(gy, gz), min(c, ly + lz)), value, (sy, sz))
    return out


def state_bound(width: int, c: int) -> int:
    """Upper bound on the table size of any node of a width-``width`` decomposition."""
    t1 = width + 1
    return 4**t1 * bell(t1) * (c + 1)


class TreewidthSolver:
    """Fills all tables once; keeps them for witness recovery and inspection."""

    def __init__(self, g: Graph, ntd: NiceTreeDecomposition, c: int):
        if c < 1:
            raise ValueError("c must be at least 1")
        check_nice(ntd)
        verdict = validate_decomposition(g, ntd.as_tree_decomposition())
        if not verdict:
            raise InputError(f"decomposition does not fit the graph: {verdict.message}")
        self.g = g
        self.ntd = ntd
        self.c = c
        self.tables: list[dict[State, Entry]] = []
        self.max_states = 0
        self._run()

    def _run(self) -> None:
        masks = self.g.masks
        c = self.c
        tables = self.tables
        for nd in self.ntd.nodes:
            if nd.kind is Kind.LEAF:
                table = {(0, 0, (), 0): (0, ())}
            elif nd.kind is Kind.INTRODUCE:
                bag_mask = sum(1 << x for x in nd.bag)
                v = nd.vertex
                table = _introduce(tables[nd.children[0]], v, masks[v] & bag_mask)
            elif nd.kind is Kind.FORGET:
                child = self.ntd.nodes[nd.children[0]]
                bag_mask = sum(1 << x for x in child.bag)
                v = nd.vertex
                table = _forget(tables[nd.children[0]], v, masks[v] & bag_mask, c)
            else:
                table = _join(tables[nd.children[0]], tables[nd.children[1]], c)
            tables.append(table)
            self.max_states = max(self.max_states, len(table))

    def result(self, witness: bool = True) -> DisconnectedOptimum:
        root = self.tables[self.ntd.root]
        entry = root.get((0, 0, (), self.c))
        if entry is None:
            return DisconnectedOptimum(None, None, self.c)
        if not witness:
            return DisconnectedOptimum(entry[0], None, self.c)
        return DisconnectedOptimum(entry[0], self._witness((0, 0, (), self.c)), self.c)

    def _witness(self, state: State) -> Matching:
        edges = []
        stack = [(self.ntd.root, state)]
        while stack:
            node, st = stack.pop()
            nd = self.ntd.nodes[node]
            back = self.tables[node][st][1]
            if nd.kind is Kind.LEAF:
                continue
            if nd.kind is Kind.JOIN:
                stack.append((nd.children[0], back[0]))
                stack.append((nd.children[1], back[1]))
                continue
            if len(back) == 2:
                edges.append(back[1])
            stack.append((nd.children[0], back[0]))
        return Matching(edges)


def tw_solve(g: Graph, ntd: NiceTreeDecomposition | None = None, c: int = 1, witness: bool = True) -> DisconnectedOptimum:
    """Largest matching with at least ``c`` components, by DP over ``ntd``.

    Without a decomposition, a min-degree elimination heuristic supplies one.
    """
    if ntd is None:
        ntd = nicify(min_degree_decomposition(g), g)
    return TreewidthSolver(g, ntd, c).result(witness)
