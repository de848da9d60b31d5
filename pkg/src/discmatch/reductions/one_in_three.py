"""Bipartite instances of 2- (or c-) disconnected matching built from One-in-Three 3SAT.

Each clause ``i`` gets an 18-vertex gadget ``B_i`` on ``l_i1..l_i9`` and
``r_i1..r_i9``.  Two copies of ``K_{3m,3m}`` sit on either side: ``H1`` on
``U1 ∪ U2`` with ``U2`` adjacent to every ``l_i1..l_i6``, and ``H2`` on
``U3 ∪ U4`` with ``U3`` adjacent to every ``r_i1..r_i6``.  A matching of size
``12m`` with two components must separate the ``l`` side from the ``r`` side
inside every gadget, and the only ways to do that encode which literal of the
clause is true.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from ..errors import InputError, PreconditionError
from ..graph import Graph, Matching, connected_components, count_components_within, induced_subgraph, verify_matching
from ..matching import maximum_matching
from .base import ReductionOutput

GADGET_SIZE = 18
GADGET_EDGE_COUNT = 26

# true literal j -> (q, t): the other two of l_4..l_6 that get matched to l_8 and l_9
_TAIL = {1: (5, 6), 2: (4, 6), 3: (4, 5)}


@dataclass(frozen=True)
class OneInThreeInstance:
    """Clauses of three signed literals (DIMACS style, variables ``1..num_vars``)."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.num_vars < 1 or not self.clauses:
            raise InputError("instance needs at least one variable and one clause")
        used = set()
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise InputError(f"clause {idx + 1} does not have exactly three literals")
            vars_ = [abs(x) for x in clause]
            if any(x == 0 or abs(x) > self.num_vars for x in clause):
                raise InputError(f"clause {idx + 1} has a literal out of range")
            if len(set(vars_)) != 3:
                raise InputError(f"clause {idx + 1} repeats a variable")
            used.update(vars_)
        missing = set(range(1, self.num_vars + 1)) - used
        if missing:
            raise InputError(f"variables {sorted(missing)} occur in no clause")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @classmethod
    def of(cls, clauses: Sequence[Sequence[int]], num_vars: int | None = None) -> "OneInThreeInstance":
        cl = tuple(tuple(int(x) for x in c) for c in clauses)
        if num_vars is None:
            num_vars = max(abs(x) for c in cl for x in c)
        return cls(num_vars, cl)


def is_one_in_three(inst: OneInThreeInstance, assignment: Mapping[int, bool]) -> bool:
    for clause in inst.clauses:
        if sum(1 for x in clause if assignment[abs(x)] == (x > 0)) != 1:
            return False
    return True


def solutions(inst: OneInThreeInstance) -> list[dict[int, bool]]:
    """All one-in-three assignments, by enumeration."""
    out = []
    for bits in range(1 << inst.num_vars):
        a = {v: bool(bits >> (v - 1) & 1) for v in range(1, inst.num_vars + 1)}
        if is_one_in_three(inst, a):
            out.append(a)
    return out


def _l(i: int, j: int) -> int:
    return GADGET_SIZE * i + j - 1


def _r(i: int, j: int) -> int:
    return GADGET_SIZE * i + 9 + j - 1


def gadget_edges(i: int = 0) -> list[tuple[int, int]]:
    """The 26 internal edges of clause gadget ``i`` (0-based)."""
    L = lambda j: _l(i, j)  # noqa: E731
    R = lambda j: _r(i, j)  # noqa: E731
    out = []
    for side in (L, R):
        out += [(side(7), side(j)) for j in (1, 2, 3)]
        out += [(side(8), side(4)), (side(8), side(5)), (side(9), side(5)), (side(9), side(6))]
    for j in (1, 2, 3):
        out.append((L(j), R(j + 3)))
        out.append((R(j), L(j + 3)))
        for q in (1, 2, 3):
            if q != j:
                out.append((L(j), R(q)))
    return out


@dataclass(frozen=True)
class _Layout:
    m: int
    c: int
    diameter3: bool
    u1: int
    u2: int
    u3: int
    u4: int
    w1: int | None
    w2: int | None
    extras: tuple[tuple[int, int], ...]
    n: int

    def block(self, which: int) -> range:
        start = (self.u1, self.u2, self.u3, self.u4)[which - 1]
        return range(start, start + 3 * self.m)


def _layout(m: int, c: int, diameter3: bool) -> _Layout:
    base = GADGET_SIZE * m
    u1, u2, u3, u4 = (base + 3 * m * k for k in range(4))
    nxt = base + 12 * m
    w1 = w2 = None
    if diameter3:
        w1, w2 = nxt, nxt + 1
        nxt += 2
    extras = tuple((nxt + 2 * a, nxt + 2 * a + 1) for a in range(c - 2))
    return _Layout(m, c, diameter3, u1, u2, u3, u4, w1, w2, extras, nxt + 2 * (c - 2))


def _literal_links(inst: OneInThreeInstance) -> list[tuple[int, int]]:
    """Edges between gadgets of clauses that share a variable."""
    where: dict[int, list[tuple[int, int, bool]]] = {}
    for i, clause in enumerate(inst.clauses):
        for q, lit in enumerate(clause, start=1):
            where.setdefault(abs(lit), []).append((i, q, lit < 0))
    out = []
    for var in sorted(where):
        for (i, q, neg_i), (j, t, neg_j) in combinations(where[var], 2):
            if neg_i != neg_j:
                out += [(_r(i, q), _l(j, t)), (_l(i, q + 3), _r(j, t + 3))]
            else:
                out += [(_l(i, q + 3), _r(j, t)), (_r(i, q), _l(j, t + 3))]
    return out


def build_one_in_three(inst: OneInThreeInstance, diameter3: bool = False, c: int = 2) -> ReductionOutput:
    """Bipartite graph with ``k = 12m + c - 2`` that has a ``k``-edge ``c``-disconnected matching iff ``inst`` is solvable.

    ``diameter3`` adds ``w1`` (adjacent to one colour class) and ``w2`` (the
    other) joined by an edge, which brings the diameter down to three.  For
    ``c > 2``, ``c - 2`` extra edges ``v_a1 v_a2`` are added, hung from ``w1``
    and ``w2`` when those exist.
    """
    if c < 2:
        raise InputError("c must be at least 2")
    check_gadget()
    m = inst.m
    lay = _layout(m, c, diameter3)
    edges: list[tuple[int, int]] = []
    for i in range(m):
        edges += gadget_edges(i)
    edges += _literal_links(inst)
    for a in lay.block(1):
        edges += [(a, b) for b in lay.block(2)]
    for a in lay.block(3):
        edges += [(a, b) for b in lay.block(4)]
    for u in lay.block(2):
        edges += [(u, _l(i, j)) for i in range(m) for j in range(1, 7)]
    for u in lay.block(3):
        edges += [(u, _r(i, j)) for i in range(m) for j in range(1, 7)]
    side1 = _side_one(lay)
    if diameter3:
        core = GADGET_SIZE * m + 12 * m
        edges += [(lay.w1, v) for v in range(core) if v in side1]
        edges += [(lay.w2, v) for v in range(core) if v not in side1]
        edges.append((lay.w1, lay.w2))
    for a, b in lay.extras:
        edges.append((a, b))
        if diameter3:
            edges += [(lay.w1, a), (lay.w2, b)]
    g = Graph.from_edges(lay.n, edges)
    names = _names(lay)
    return ReductionOutput(g, 12 * m + c - 2, c, names, {"layout": lay, "side1": frozenset(side1)})


def _side_one(lay: _Layout) -> set[int]:
    """One colour class of the core graph."""
    out = set()
    for i in range(lay.m):
        out.update(_l(i, j) for j in range(1, 7))
        out.update(_r(i, j) for j in (7, 8, 9))
    out.update(lay.block(1))
    out.update(lay.block(3))
    return out


def _names(lay: _Layout) -> tuple[str, ...]:
    names = []
    for i in range(1, lay.m + 1):
        names += [f"l_{i}_{j}" for j in range(1, 10)]
        names += [f"r_{i}_{j}" for j in range(1, 10)]
    for blk in (1, 2, 3, 4):
        names += [f"u{blk}_{a}" for a in range(1, 3 * lay.m + 1)]
    if lay.diameter3:
        names += ["w1", "w2"]
    for a in range(1, len(lay.extras) + 1):
        names += [f"v_{a}_1", f"v_{a}_2"]
    return tuple(names)


def table_rows() -> tuple[frozenset[str], ...]:
    """Saturated gadget vertex sets allowed for true literal 1, 2, 3 (clause-free labels)."""
    rows = []
    for j in (1, 2, 3):
        q, t = _TAIL[j]
        labels = {f"l{x}" for x in (j, q, t, 7, 8, 9)} | {f"r{x}" for x in (j, q, t, 7, 8, 9)}
        rows.append(frozenset(labels))
    return tuple(rows)


def _local_label(v: int) -> str:
    loc = v % GADGET_SIZE
    return f"l{loc + 1}" if loc < 9 else f"r{loc - 8}"


@lru_cache(maxsize=None)
def gadget_separators() -> tuple[frozenset[str], ...]:
    """Size-6 minimal h1-h2 separators inside one gadget whose complement in the gadget is perfectly matchable.

    Computed on ``B ∪ H1 ∪ H2`` for a single clause.  Returned as the sets of
    remaining (saturable) gadget vertices, labelled ``l1..l9, r1..r9``.
    """
    lay = _layout(1, 2, False)
    edges = list(gadget_edges(0))
    for a in lay.block(1):
        edges += [(a, b) for b in lay.block(2)]
    for a in lay.block(3):
        edges += [(a, b) for b in lay.block(4)]
    for u in lay.block(2):
        edges += [(u, _l(0, j)) for j in range(1, 7)]
    for u in lay.block(3):
        edges += [(u, _r(0, j)) for j in range(1, 7)]
    g = Graph.from_edges(lay.n, edges)
    h1, h2 = lay.u1, lay.u3
    found = []
    gadget = range(GADGET_SIZE)
    for sep in combinations(gadget, 6):
        removed = set(sep)
        keep = [v for v in range(g.n) if v not in removed]
        sub, order = induced_subgraph(g, keep)
        label = connected_components(sub).label
        pos = {v: i for i, v in enumerate(order)}
        if label[pos[h1]] == label[pos[h2]]:
            continue
        c1, c2 = label[pos[h1]], label[pos[h2]]
        # minimality: every separator vertex touches both sides
        if not all(
            any(u not in removed and label[pos[u]] == c1 for u in g.adj[s])
            and any(u not in removed and label[pos[u]] == c2 for u in g.adj[s])
            for s in sep
        ):
            continue
        rest = [v for v in gadget if v not in removed]
        rg, _ = induced_subgraph(g, rest)
        if 2 * maximum_matching(rg).cardinality != len(rest):
            continue
        found.append(frozenset(_local_label(v) for v in rest))
    return tuple(sorted(found, key=sorted))


@lru_cache(maxsize=None)
def check_gadget() -> None:
    """Assert the gadget has 26 edges and exactly the three allowed saturation patterns."""
    if len(gadget_edges(0)) != GADGET_EDGE_COUNT:
        raise AssertionError("gadget edge count differs from 26")
    if set(gadget_separators()) != set(table_rows()):
        raise AssertionError("gadget separators do not match the three allowed patterns")


def encode_assignment(inst: OneInThreeInstance, assignment: Mapping[int, bool], out: ReductionOutput | None = None) -> Matching:
    """Matching of size ``k`` built from a one-in-three assignment."""
    if set(assignment) != set(range(1, inst.num_vars + 1)):
        raise PreconditionError("assignment must give a value to every variable", "incomplete-assignment")
    if not is_one_in_three(inst, assignment):
        raise PreconditionError("assignment does not make exactly one literal true per clause", "not-one-in-three")
    if out is None:
        out = build_one_in_three(inst)
    lay: _Layout = out.extra["layout"]
    edges = []
    for i, clause in enumerate(inst.clauses):
        j = next(q for q, x in enumerate(clause, start=1) if assignment[abs(x)] == (x > 0))
        q, t = _TAIL[j]
        edges += [
            (_l(i, j), _l(i, 7)),
            (_r(i, j), _r(i, 7)),
            (_l(i, q), _l(i, 8)),
            (_r(i, q), _r(i, 8)),
            (_l(i, t), _l(i, 9)),
            (_r(i, t), _r(i, 9)),
        ]
    edges += list(zip(lay.block(1), lay.block(2)))
    edges += list(zip(lay.block(3), lay.block(4)))
    edges += list(lay.extras)
    m = Matching(edges)
    report = structure_report(inst, out, m)
    bad = [name for name, ok in report.items() if not ok]
    if bad:
        raise AssertionError(f"encoded matching fails {bad}")
    return m


def structure_report(inst: OneInThreeInstance, out: ReductionOutput, m: Matching) -> dict[str, bool]:
    """Named structural checks a ``k``-edge ``c``-disconnected matching must pass, in dependency order."""
    g = out.graph
    lay: _Layout = out.extra["layout"]
    report: dict[str, bool] = {}
    verdict = verify_matching(g, m, out.k, out.c)
    report["not-a-matching"] = verdict.reason is None or verdict.reason.value != "not-a-matching"
    if not report["not-a-matching"]:
        return report
    report["too-few-edges"] = len(m) >= out.k
    report["too-few-components"] = verdict.components >= out.c
    sat = m.saturated
    report["h1-h2-saturated"] = bool(sat & set(lay.block(1)) | sat & set(lay.block(2))) and bool(
        sat & set(lay.block(3)) | sat & set(lay.block(4))
    )
    core = GADGET_SIZE * lay.m + 12 * lay.m + (2 if lay.diameter3 else 0)
    report["two-components"] = count_components_within(g, [v for v in sat if v < core]) == 2
    rows = set(table_rows())
    six = True
    row_ok = True
    for i in range(lay.m):
        lo, hi = GADGET_SIZE * i, GADGET_SIZE * (i + 1)
        inside = sum(1 for u, v in m.edges if lo <= u < hi and lo <= v < hi)
        six &= inside == 6
        labels = frozenset(_local_label(v) for v in sat if lo <= v < hi)
        row_ok &= labels in rows
    report["six-edges-per-gadget"] = six
    report["table-row"] = row_ok
    if row_ok:
        report["variable-consistency"] = _decode_raw(inst, m) is not None
    else:
        report["variable-consistency"] = False
    return report


def _decode_raw(inst: OneInThreeInstance, m: Matching) -> dict[int, bool] | None:
    sat = m.saturated
    value: dict[int, bool] = {}
    for i, clause in enumerate(inst.clauses):
        for j, lit in enumerate(clause, start=1):
            truth = _l(i, j) in sat
            val = truth if lit > 0 else not truth
            if value.setdefault(abs(lit), val) != val:
                return None
    return value


def decode_matching(inst: OneInThreeInstance, m: Matching | Sequence[tuple[int, int]], out: ReductionOutput | None = None) -> dict[int, bool]:
    """Assignment read off a ``k``-edge ``c``-disconnected matching: literal ``j`` of clause ``i`` is true iff ``l_ij`` is saturated."""
    if out is None:
        out = build_one_in_three(inst)
    if not isinstance(m, Matching):
        try:
            m = Matching(m)
        except InputError as exc:
            raise PreconditionError(str(exc), "not-a-matching") from exc
    for name, ok in structure_report(inst, out, m).items():
        if not ok:
            raise PreconditionError(f"matching fails structural check '{name}'", name)
    value = _decode_raw(inst, m)
    if value is None or not is_one_in_three(inst, value):
        raise PreconditionError("decoded assignment is not one-in-three", "not-one-in-three")
    return value
