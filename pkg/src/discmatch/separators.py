"""Minimal vertex separators and the solver that deletes up to ``c - 1`` of them."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ResourceLimitError
from .graph import Graph, Matching, induced_subgraph, mask_components
from .matching import maximum_matching
from .oracle import DisconnectedOptimum

log = logging.getLogger(__name__)

DEFAULT_SEPARATOR_LIMIT = 100_000


@dataclass(frozen=True)
class SeparatorFamily:
    """All minimal separators of ``host``, each a sorted tuple; listed in sorted order."""

    separators: tuple[tuple[int, ...], ...]
    host: Graph

    def __len__(self) -> int:
        return len(self.separators)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.separators)


def _components_avoiding(g: Graph, removed: int) -> list[int]:
    """Components of ``G - removed`` as bitmasks."""
    masks = g.masks
    rest = ((1 << g.n) - 1) & ~removed
    out = []
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        out.append(comp)
    return out


def _neighborhood(g: Graph, comp: int) -> int:
    masks = g.masks
    out = 0
    x = comp
    while x:
        b = x & -x
        x ^= b
        out |= masks[b.bit_length() - 1]
    return out & ~comp


def _bits(x: int) -> tuple[int, ...]:
    out = []
    while x:
        b = x & -x
        out.append(b.bit_length() - 1)
        x ^= b
    return tuple(out)


def full_components(g: Graph, sep: Iterable[int]) -> int:
    """Number of components ``C`` of ``G - sep`` with ``N(C) = sep``."""
    s = 0
    for v in sep:
        s |= 1 << v
    return sum(1 for comp in _components_avoiding(g, s) if _neighborhood(g, comp) == s)


def is_minimal_separator(g: Graph, sep: Iterable[int]) -> bool:
    return full_components(g, sep) >= 2


def enumerate_minimal_separators(g: Graph, limit: int = DEFAULT_SEPARATOR_LIMIT) -> SeparatorFamily:
    """Close the neighborhood-seeded separators under the ``S ∪ N(x)`` expansion step.

    Raises :class:`ResourceLimitError` once more than ``limit`` separators are found.
    """
    masks = g.masks
    found: set[int] = set()
    queue: list[int] = []

    def add(s: int) -> None:
        if s in found:
            return
        found.add(s)
        if len(found) > limit:
            raise ResourceLimitError(f"more than {limit} minimal separators")
        queue.append(s)

    for v in range(g.n):
        closed = masks[v] | (1 << v)
        for comp in _components_avoiding(g, closed):
            add(_neighborhood(g, comp))
    while queue:
        s = queue.pop()
        for x in _bits(s):
            for comp in _components_avoiding(g, s | masks[x]):
                add(_neighborhood(g, comp))
    # the empty set only qualifies when the graph is disconnected
    verified = [s for s in found if is_minimal_separator(g, _bits(s))]
    seps = tuple(sorted(_bits(s) for s in verified))
    log.debug("enumerated %d minimal separators", len(seps))
    return SeparatorFamily(seps, g)


def brute_force_minimal_separators(g: Graph) -> set[tuple[int, ...]]:
    """Every vertex subset with two full components; exponential, for testing."""
    out = set()
    for s in range(1 << g.n):
        sep = _bits(s)
        if is_minimal_separator(g, sep):
            out.add(sep)
    return out


def _edge_components(g: Graph, removed: int) -> int:
    """Components of ``G - removed`` that contain at least one edge."""
    return sum(1 for comp in _components_avoiding(g, removed) if comp & (comp - 1))


def xp_solve(g: Graph, c: int, seps: SeparatorFamily | None = None) -> DisconnectedOptimum:
    """Largest ``c``-disconnected matching found by deleting at most ``c - 1`` minimal separators.

    For each choice of separators a maximum matching of the remaining graph is
    computed; it qualifies if it induces at least ``c`` components.  Stops
    early once a qualifying matching reaches the maximum matching size of ``g``.
    Ties keep the first candidate in combination order, comparing witnesses
    lexicographically.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    beta = maximum_matching(g)
    if c == 1:
        if beta.cardinality == 0:
            return DisconnectedOptimum(None, None, c)
        return DisconnectedOptimum(beta.cardinality, beta.matching, c)
    if seps is None:
        seps = enumerate_minimal_separators(g)
    sep_masks = [sum(1 << v for v in s) for s in seps]
    masks = g.masks
    seen: set[int] = set()
    best: Matching | None = None
    best_key: tuple[int, list] | None = None
    for size in range(0, min(c - 1, len(sep_masks)) + 1):
        for combo in combinations(range(len(sep_masks)), size):
            removed = 0
            for i in combo:
                removed |= sep_masks[i]
            if removed in seen:
                continue
            seen.add(removed)
            if _edge_components(g, removed) < c:
                continue
            keep = [v for v in range(g.n) if not removed >> v & 1]
            sub, order = induced_subgraph(g, keep)
            mm = maximum_matching(sub).matching
            m = Matching((order[u], order[v]) for u, v in mm.edges)
            sat = sum(1 << v for v in m.saturated)
            if mask_components(masks, sat) < c:
                continue
            key = (-len(m), sorted(m.edges))
            if best_key is None or key < best_key:
                best, best_key = m, key
                if len(m) == beta.cardinality:
                    return DisconnectedOptimum(len(m), m, c)
    if best is None:
        return DisconnectedOptimum(None, None, c)
    return DisconnectedOptimum(len(best), best, c)
