"""OR-composition of X3C instances into one Induced Matching instance.

All instances share the ground set ``1..n``.  Every distinct set ``j`` across
the batch gets a ``K_{1,4}`` with centre ``w_j``, a private leaf ``w_j*`` and
one interface leaf ``w_ja`` per element ``a``, which is joined to ``v_a``.
A selector (a star centred at ``q`` for ``vc``, a clique for ``dc``) has one
vertex ``p_i`` per instance, adjacent to the interface leaves of every set
that instance lacks.  Everything except the ``p_i`` forms the modulator.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..errors import InputError, PreconditionError
from ..graph import Graph, Matching
from .base import ReductionOutput
from .x3c import X3CInstance, is_exact_cover

PARAMS = ("vc", "dc")


def cross_compose(instances: Sequence[X3CInstance], param: str = "vc") -> ReductionOutput:
    """Build the composed graph; ``k = c = n + |sets| - n/3 + 1``.

    ``extra["modulator"]`` holds the vertex set whose removal leaves an
    independent set (``vc``) or a clique (``dc``); ``extra["sets"]`` lists the
    distinct sets in gadget order.
    """
    if param not in PARAMS:
        raise InputError(f"param must be one of {PARAMS}")
    if not instances:
        raise InputError("need at least one instance")
    n = instances[0].n
    m = instances[0].m
    for idx, inst in enumerate(instances):
        if inst.n != n:
            raise InputError(f"instance {idx + 1} has ground size {inst.n}, expected {n}")
        if inst.m != m:
            raise InputError(f"instance {idx + 1} has {inst.m} sets, expected {m}")
    if len({frozenset(inst.sets) for inst in instances}) != len(instances):
        raise InputError("instances must have pairwise distinct set families")

    sets = sorted({s for inst in instances for s in inst.sets})
    where = {s: j for j, s in enumerate(sets)}
    t = len(instances)
    base_v = 5 * len(sets)
    q = base_v + n
    p0 = q + 1

    def centre(j):
        return 5 * j

    def leaf(j):
        return 5 * j + 1

    def iface(j, pos):
        return 5 * j + 2 + pos

    edges = []
    names = []
    for j, s in enumerate(sets, start=0):
        edges += [(centre(j), leaf(j))] + [(centre(j), iface(j, a)) for a in range(3)]
        edges += [(iface(j, a), base_v + x - 1) for a, x in enumerate(s)]
        names += [f"w_{j + 1}", f"w_{j + 1}_star"] + [f"w_{j + 1}_{x}" for x in s]
    names += [f"v_{a}" for a in range(1, n + 1)]
    names.append("q")
    names += [f"p_{i}" for i in range(1, t + 1)]
    for i, inst in enumerate(instances):
        own = set(inst.sets)
        edges.append((q, p0 + i))
        for s in sets:
            if s not in own:
                edges += [(p0 + i, iface(where[s], a)) for a in range(3)]
    if param == "dc":
        edges += [(p0 + a, p0 + b) for a, b in combinations(range(t), 2)]
    g = Graph.from_edges(p0 + t, edges)
    k = n + len(sets) - n // 3 + 1
    modulator = frozenset(range(p0))
    return ReductionOutput(g, k, k, tuple(names), {"modulator": modulator, "sets": tuple(sets), "param": param})


def compose_certificate(out: ReductionOutput, instances: Sequence[X3CInstance], index: int, cover: Iterable[Sequence[int]]) -> Matching:
    """Induced matching of size ``k`` from an exact cover of instance ``index`` (0-based)."""
    inst = instances[index]
    cover = [tuple(sorted(s)) for s in cover]
    if not is_exact_cover(inst, cover):
        raise PreconditionError("the given sets are not an exact cover of the chosen instance", "not-an-exact-cover")
    sets = out.extra["sets"]
    n = inst.n
    base_v = 5 * len(sets)
    q = base_v + n
    edges = []
    for j, s in enumerate(sets):
        if s in cover:
            edges += [(5 * j + 2 + a, base_v + x - 1) for a, x in enumerate(s)]
        else:
            edges.append((5 * j, 5 * j + 1))
    edges.append((q, q + 1 + index))
    return Matching(edges)


def is_induced_matching(g: Graph, m: Matching) -> bool:
    """Every saturated vertex sees exactly one saturated neighbour, its mate."""
    sat = m.saturated
    mate = m.mate()
    for v in sat:
        if [u for u in g.adj[v] if u in sat] != [mate[v]]:
            return False
    return all(g.has_edge(u, v) for u, v in m.edges)
