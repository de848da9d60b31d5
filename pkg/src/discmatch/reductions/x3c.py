"""Chordal instances of c-disconnected matching built from Exact Cover by 3-Sets.

Each set ``c_i`` becomes a ``K_5`` on ``w_ix`` (``x ∈ c_i``), ``w_i+`` and
``w_i-``; every element ``x`` becomes a vertex ``v_x`` hanging off the
``w_ix``.  The interface triples of all sets are joined into one clique, so
the ``v_x`` are simplicial and the graph is chordal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import InputError, PreconditionError
from ..graph import Graph, Matching, verify_matching
from .base import ReductionOutput


@dataclass(frozen=True)
class X3CInstance:
    """Ground set ``1..n`` with ``n = 3q`` and a list of distinct triples."""

    n: int
    sets: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 3 or self.n % 3:
            raise InputError(f"ground size {self.n} is not a positive multiple of 3")
        seen = set()
        for idx, s in enumerate(self.sets):
            if len(s) != 3 or len(set(s)) != 3:
                raise InputError(f"set {idx + 1} does not have three distinct elements")
            if any(not 1 <= x <= self.n for x in s):
                raise InputError(f"set {idx + 1} has an element outside 1..{self.n}")
            if tuple(sorted(s)) != tuple(s):
                raise InputError(f"set {idx + 1} is not sorted")
            if s in seen:
                raise InputError(f"set {idx + 1} repeats an earlier set")
            seen.add(s)
        if not self.sets:
            raise InputError("instance has no sets")

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> "X3CInstance":
        return cls(n, tuple(tuple(sorted(int(x) for x in s)) for s in sets))

    @property
    def q(self) -> int:
        return self.n // 3

    @property
    def m(self) -> int:
        return len(self.sets)


def is_exact_cover(inst: X3CInstance, cover: Iterable[Sequence[int]]) -> bool:
    chosen = [tuple(sorted(s)) for s in cover]
    if any(s not in inst.sets for s in chosen) or len(set(chosen)) != len(chosen):
        return False
    elems = sorted(x for s in chosen for x in s)
    return elems == list(range(1, inst.n + 1))


def exact_covers(inst: X3CInstance) -> list[tuple[tuple[int, int, int], ...]]:
    """All exact covers, by enumeration over ``q``-subsets of the sets."""
    return [c for c in combinations(inst.sets, inst.q) if is_exact_cover(inst, c)]


def _w(i: int, pos: int) -> int:
    """``pos`` 0..2 is the interface vertex of the pos-th element, 3 is ``w+``, 4 is ``w-``."""
    return 5 * i + pos


def _v(inst: X3CInstance, x: int) -> int:
    return 5 * inst.m + x - 1


def build_x3c(inst: X3CInstance, bounded_degree: bool = False, universal_vertex: bool = False) -> ReductionOutput:
    """Graph with ``c = m - q + 1`` and ``k = m + 3q``.

    ``bounded_degree`` links two interface triples only when the sets share an
    element; ``universal_vertex`` appends a vertex adjacent to everything.
    """
    m = inst.m
    n = 5 * m + inst.n + (1 if universal_vertex else 0)
    edges = []
    for i, s in enumerate(inst.sets):
        edges += [(_w(i, a), _w(i, b)) for a, b in combinations(range(5), 2)]
        edges += [(_w(i, a), _v(inst, x)) for a, x in enumerate(s)]
    for i, j in combinations(range(m), 2):
        if bounded_degree and not set(inst.sets[i]) & set(inst.sets[j]):
            continue
        edges += [(_w(i, a), _w(j, b)) for a in range(3) for b in range(3)]
    if universal_vertex:
        edges += [(n - 1, v) for v in range(n - 1)]
    names = []
    for i, s in enumerate(inst.sets, start=1):
        names += [f"w_{i}_{x}" for x in s] + [f"w_{i}_plus", f"w_{i}_minus"]
    names += [f"v_{x}" for x in range(1, inst.n + 1)]
    if universal_vertex:
        names.append("z")
    return ReductionOutput(Graph.from_edges(n, edges), m + 3 * inst.q, m - inst.q + 1, tuple(names))


def encode_cover(inst: X3CInstance, cover: Iterable[Sequence[int]], out: ReductionOutput | None = None) -> Matching:
    """``w_ix v_x`` for the cover sets and ``w_j+ w_j-`` for every set."""
    cover = [tuple(sorted(s)) for s in cover]
    if not is_exact_cover(inst, cover):
        raise PreconditionError("the given sets are not an exact cover", "not-an-exact-cover")
    edges = []
    for i, s in enumerate(inst.sets):
        if s in cover:
            edges += [(_w(i, a), _v(inst, x)) for a, x in enumerate(s)]
        edges.append((_w(i, 3), _w(i, 4)))
    m = Matching(edges)
    if out is not None:
        verdict = verify_matching(out.graph, m, out.k, out.c)
        if not verdict:
            raise AssertionError(f"encoded matching fails: {verdict}")
    return m


def decode_cover(inst: X3CInstance, m: Matching | Sequence[tuple[int, int]], out: ReductionOutput | None = None) -> tuple[tuple[int, int, int], ...]:
    """Sets whose three interface vertices are all saturated."""
    if out is None:
        out = build_x3c(inst)
    verdict = verify_matching(out.graph, m, out.k, out.c)
    if not verdict:
        raise PreconditionError(f"matching rejected: {verdict}", verdict.reason.value)
    if not isinstance(m, Matching):
        m = Matching(m)
    sat = m.saturated
    chosen = tuple(s for i, s in enumerate(inst.sets) if all(_w(i, a) in sat for a in range(3)))
    if not is_exact_cover(inst, chosen):
        raise PreconditionError("fully saturated sets do not form an exact cover", "not-an-exact-cover")
    return chosen
