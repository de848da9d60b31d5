"""Plain-text readers and writers.  Files use 1-based vertex ids; memory is 0-based."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .decomposition import TreeDecomposition, validate_decomposition
from .errors import InputError, ParseError
from .graph import Graph, Matching
from .interval import IntervalModel
from .reductions.one_in_three import OneInThreeInstance
from .reductions.x3c import X3CInstance


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Non-blank, non-comment lines as (1-based line number, tokens)."""
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        yield no, toks


def _ints(toks: Sequence[str], no: int) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(toks)!r}", no) from None


def _vertex(x: int, n: int, no: int) -> int:
    if not 1 <= x <= n:
        raise ParseError(f"vertex {x} outside 1..{n}", no)
    return x - 1


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, toks in _lines(text):
        if toks[0] == "p":
            if header is not None:
                raise ParseError("second header", no)
            if len(toks) != 4 or toks[1] != "dm":
                raise ParseError("header must read 'p dm <n> <m>'", no)
            n, m = _ints(toks[2:], no)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", no)
            header = (n, m)
        elif toks[0] == "e":
            if header is None:
                raise ParseError("edge before header", no)
            if len(toks) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", no)
            u, v = (_vertex(x, header[0], no) for x in _ints(toks[1:], no))
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u + 1} {v + 1}", no)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", no)
    if header is None:
        raise ParseError("missing 'p dm' header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def write_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {line}" for line in comments]
    out.append(f"p dm {g.n} {g.edge_count}")
    out += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def parse_matching(text: str, g: Graph | None = None) -> Matching:
    """Edge lines ``u v``; when ``g`` is given every pair must be an edge of it."""
    edges = []
    for no, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError("matching line must read '<u> <v>'", no)
        u, v = _ints(toks, no)
        if g is not None:
            u, v = _vertex(u, g.n, no), _vertex(v, g.n, no)
            if not g.has_edge(u, v):
                raise ParseError(f"{u + 1} {v + 1} is not an edge of the graph", no)
        else:
            if u < 1 or v < 1:
                raise ParseError("vertex ids start at 1", no)
            u, v = u - 1, v - 1
        edges.append((u, v))
    try:
        return Matching(edges)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def write_matching(m: Matching) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in m)


def parse_td(text: str, g: Graph | None = None) -> TreeDecomposition:
    """PACE ``.td`` format: ``s td <bags> <width+1> <n>``, ``b <id> <v...>``, then tree edges."""
    header = None
    bags: dict[int, list[int]] = {}
    edges = []
    for no, toks in _lines(text):
        if toks[0] == "s":
            if header is not None:
                raise ParseError("second header", no)
            if len(toks) != 5 or toks[1] != "td":
                raise ParseError("header must read 's td <bags> <width+1> <n>'", no)
            header = _ints(toks[2:], no)
        elif header is None:
            raise ParseError("line before header", no)
        elif toks[0] == "b":
            nums = _ints(toks[1:], no)
            if not nums:
                raise ParseError("bag line without id", no)
            bid = nums[0]
            if not 1 <= bid <= header[0]:
                raise ParseError(f"bag id {bid} outside 1..{header[0]}", no)
            if bid in bags:
                raise ParseError(f"bag {bid} listed twice", no)
            bags[bid] = [_vertex(x, header[2], no) for x in nums[1:]]
        else:
            if len(toks) != 2:
                raise ParseError("tree edge must read '<id> <id>'", no)
            a, b = _ints(toks, no)
            for x in (a, b):
                if not 1 <= x <= header[0]:
                    raise ParseError(f"bag id {x} outside 1..{header[0]}", no)
            edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError("missing 's td' header")
    nb, w1, n = header
    if len(bags) != nb:
        raise ParseError(f"header announces {nb} bags, found {len(bags)}")
    if max((len(b) for b in bags.values()), default=0) != w1:
        raise ParseError(f"header announces bag size {w1}, largest bag differs")
    td = TreeDecomposition.make([bags[i] for i in range(1, nb + 1)], edges)
    if g is not None:
        if g.n != n:
            raise ParseError(f"decomposition is for {n} vertices, graph has {g.n}")
        verdict = validate_decomposition(g, td)
        if not verdict:
            raise ParseError(f"invalid tree decomposition ({verdict.reason}): {verdict.message}")
    return td


def write_td(td: TreeDecomposition, n: int) -> str:
    out = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        out.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    out += [f"{a + 1} {b + 1}" for a, b in td.edges]
    return "\n".join(out) + "\n"


def parse_cnf(text: str) -> OneInThreeInstance:
    header = None
    clauses = []
    for no, toks in _lines(text):
        if toks[0] == "p":
            if header is not None:
                raise ParseError("second header", no)
            if len(toks) != 4 or toks[1] != "cnf":
                raise ParseError("header must read 'p cnf <vars> <clauses>'", no)
            header = _ints(toks[2:], no)
            continue
        if header is None:
            raise ParseError("clause before header", no)
        lits = _ints(toks, no)
        if len(lits) != 4 or lits[-1] != 0 or 0 in lits[:3]:
            raise ParseError("clause must hold three nonzero literals followed by 0", no)
        lits = lits[:3]
        if any(abs(x) > header[0] for x in lits):
            raise ParseError(f"literal outside 1..{header[0]}", no)
        if len({abs(x) for x in lits}) != 3:
            raise ParseError("clause repeats a variable", no)
        clauses.append(tuple(lits))
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return OneInThreeInstance(header[0], tuple(clauses))
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def write_cnf(inst: OneInThreeInstance) -> str:
    out = [f"p cnf {inst.num_vars} {inst.m}"]
    out += [" ".join(str(x) for x in clause) + " 0" for clause in inst.clauses]
    return "\n".join(out) + "\n"


def _parse_triples(text: str, what: str) -> tuple[list[int] | None, list[tuple[int, list[int]]]]:
    header = None
    rows = []
    for no, toks in _lines(text):
        if toks[0] == "p":
            if header is not None:
                raise ParseError("second header", no)
            if len(toks) != 4 or toks[1] != what:
                raise ParseError(f"header must read 'p {what} <n> <m>'", no)
            header = _ints(toks[2:], no)
            continue
        rows.append((no, _ints(toks, no)))
    return header, rows


def parse_x3c(text: str) -> X3CInstance:
    header, rows = _parse_triples(text, "x3c")
    if header is None:
        raise ParseError("missing 'p x3c' header")
    n, m = header
    seen = set()
    sets = []
    for no, row in rows:
        if len(row) != 3 or len(set(row)) != 3:
            raise ParseError("set line must hold three distinct elements", no)
        for x in row:
            if not 1 <= x <= n:
                raise ParseError(f"element {x} outside 1..{n}", no)
        key = tuple(sorted(row))
        if key in seen:
            raise ParseError("repeated set", no)
        seen.add(key)
        sets.append(key)
    if len(sets) != m:
        raise ParseError(f"header announces {m} sets, found {len(sets)}")
    try:
        return X3CInstance(n, tuple(sets))
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def write_x3c(inst: X3CInstance) -> str:
    out = [f"p x3c {inst.n} {inst.m}"]
    out += [" ".join(map(str, s)) for s in inst.sets]
    return "\n".join(out) + "\n"


def parse_intervals(text: str, n: int | None = None) -> IntervalModel:
    """Lines ``i <vertex> <left> <right>``; every vertex ``1..n`` exactly once."""
    found: dict[int, tuple[int, int]] = {}
    for no, toks in _lines(text):
        if toks[0] != "i" or len(toks) != 4:
            raise ParseError("interval line must read 'i <vertex> <left> <right>'", no)
        v, lo, hi = _ints(toks[1:], no)
        if v < 1:
            raise ParseError("vertex ids start at 1", no)
        if v in found:
            raise ParseError(f"vertex {v} has two intervals", no)
        if lo > hi:
            raise ParseError(f"left {lo} exceeds right {hi}", no)
        found[v] = (lo, hi)
    size = len(found) if n is None else n
    if sorted(found) != list(range(1, size + 1)):
        raise ParseError(f"intervals must cover vertices 1..{size} exactly")
    return IntervalModel(tuple(found[v] for v in range(1, size + 1)))


def write_intervals(model: IntervalModel) -> str:
    return "".join(f"i {v} {lo} {hi}\n" for v, (lo, hi) in enumerate(model.intervals, start=1))


def write_names(names: Sequence[str]) -> str:
    return "".join(f"{i} {nm}\n" for i, nm in enumerate(names, start=1))


def parse_names(text: str) -> tuple[str, ...]:
    out = []
    for no, toks in _lines(text):
        if len(toks) != 2:
            raise ParseError("name line must read '<vertex> <name>'", no)
        (idx,) = _ints(toks[:1], no)
        if idx != len(out) + 1:
            raise ParseError(f"expected vertex {len(out) + 1}, got {idx}", no)
        out.append(toks[1])
    return tuple(out)


def write_assignment(assignment: Mapping[int, bool]) -> str:
    lits = [v if assignment[v] else -v for v in sorted(assignment)]
    return "v " + " ".join(map(str, lits)) + " 0\n"


def parse_assignment(text: str, num_vars: int | None = None) -> dict[int, bool]:
    """One or more ``v`` lines of signed variables, closed by ``0``."""
    out: dict[int, bool] = {}
    closed = False
    for no, toks in _lines(text):
        if toks[0] != "v":
            raise ParseError("assignment line must start with 'v'", no)
        if closed:
            raise ParseError("values after the closing 0", no)
        for x in _ints(toks[1:], no):
            if x == 0:
                closed = True
                continue
            if closed:
                raise ParseError("values after the closing 0", no)
            if abs(x) in out:
                raise ParseError(f"variable {abs(x)} assigned twice", no)
            out[abs(x)] = x > 0
    if not closed:
        raise ParseError("assignment not terminated by 0")
    if num_vars is not None and sorted(out) != list(range(1, num_vars + 1)):
        raise ParseError(f"assignment must cover variables 1..{num_vars}")
    return out


def parse_cover(text: str) -> tuple[tuple[int, int, int], ...]:
    out = []
    for no, toks in _lines(text):
        row = _ints(toks, no)
        if len(row) != 3:
            raise ParseError("cover line must hold three elements", no)
        out.append(tuple(sorted(row)))
    return tuple(out)


def write_cover(cover: Iterable[Sequence[int]]) -> str:
    return "".join(" ".join(map(str, sorted(s))) + "\n" for s in sorted(tuple(sorted(s)) for s in cover))
