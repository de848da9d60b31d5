"""Command-line interface: ``discmatch <command> ...``.

Exit codes: 0 success or YES, 1 NO or infeasible, 2 usage or input error,
3 a size guard was tripped.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import io
from .errors import DiscMatchError, InputError, PreconditionError, ResourceLimitError
from .graph import Matching, verify_matching
from .matching import maximum_connected_matching
from .oracle import brute_force_disconnected
from .reductions import (
    build_one_in_three,
    build_x3c,
    compose_certificate,
    cross_compose,
    decode_cover,
    decode_matching,
    encode_assignment,
    encode_cover,
)
from .separators import DEFAULT_SEPARATOR_LIMIT, enumerate_minimal_separators
from .solvers import ALGORITHMS, DEFAULT_BRUTE_LIMIT, solve

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("discmatch")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _graph(args):
    return io.parse_graph(_read(args.graph))


def cmd_solve(args) -> int:
    g = _graph(args)
    td = io.parse_td(_read(args.td), g) if args.td else None
    model = io.parse_intervals(_read(args.intervals), g.n) if args.intervals else None
    sol = solve(g, args.c, args.algo, td, model, args.brute_limit, args.separator_limit)
    opt = sol.optimum
    print(f"beta_dc = {opt.value}" if opt.feasible else "infeasible")
    if opt.feasible and args.emit_matching:
        _emit(args.emit_matching, io.write_matching(opt.witness))
    if args.k is not None:
        yes = opt.feasible and opt.value >= args.k
        print("YES" if yes else "NO")
        return EXIT_OK if yes else EXIT_NO
    return EXIT_OK if opt.feasible else EXIT_NO


def cmd_connect(args) -> int:
    g = _graph(args)
    m = maximum_connected_matching(g)
    print(f"beta_c = {len(m)}")
    if args.emit_matching:
        _emit(args.emit_matching, io.write_matching(m))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _graph(args)
    if g.n > args.brute_limit:
        raise ResourceLimitError(f"brute force limited to {args.brute_limit} vertices, graph has {g.n}")
    opt = brute_force_disconnected(g, args.c)
    if not opt.feasible:
        print("infeasible")
        return EXIT_NO
    print(f"beta_dc = {opt.value}")
    sys.stdout.write(io.write_matching(opt.witness))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args)
    m = io.parse_matching(_read(args.matching))
    verdict = verify_matching(g, m, args.k, args.c)
    print(verdict)
    return EXIT_OK if verdict else EXIT_NO


def cmd_separators(args) -> int:
    g = _graph(args)
    for sep in enumerate_minimal_separators(g, args.separator_limit):
        print(" ".join(str(v + 1) for v in sep))
    return EXIT_OK


def _write_reduction(args, out) -> None:
    _emit(args.out, io.write_graph(out.graph, [f"k {out.k}", f"c {out.c}"]))
    if args.names:
        _emit(args.names, io.write_names(out.vertex_names))
    print(f"n = {out.graph.n} k = {out.k} c = {out.c}", file=sys.stderr if args.out in (None, "-") else sys.stdout)


def _sat_out(args):
    inst = io.parse_cnf(_read(args.cnf))
    return inst, build_one_in_three(inst, args.diameter3, args.c)


def _x3c_out(args):
    inst = io.parse_x3c(_read(args.instance))
    return inst, build_x3c(inst, args.bounded_degree, args.universal_vertex)


def _compose_out(args):
    insts = [io.parse_x3c(_read(p)) for p in args.instances]
    return insts, cross_compose(insts, args.param)


def cmd_reduce(args) -> int:
    if args.problem == "one-in-three":
        _, out = _sat_out(args)
    elif args.problem == "x3c":
        _, out = _x3c_out(args)
    else:
        insts, out = _compose_out(args)
        if args.modulator:
            _emit(args.modulator, "".join(f"{v + 1}\n" for v in sorted(out.extra["modulator"])))
    _write_reduction(args, out)
    return EXIT_OK


def cmd_encode(args) -> int:
    if args.problem == "one-in-three":
        inst, out = _sat_out(args)
        m = encode_assignment(inst, io.parse_assignment(_read(args.assignment), inst.num_vars), out)
    elif args.problem == "x3c":
        inst, out = _x3c_out(args)
        m = encode_cover(inst, io.parse_cover(_read(args.cover)), out)
    else:
        insts, out = _compose_out(args)
        if not 1 <= args.index <= len(insts):
            raise InputError(f"--index must lie in 1..{len(insts)}")
        m = compose_certificate(out, insts, args.index - 1, io.parse_cover(_read(args.cover)))
    _emit(args.out, io.write_matching(m))
    return EXIT_OK


def cmd_decode(args) -> int:
    if args.problem == "one-in-three":
        inst, out = _sat_out(args)
        m = io.parse_matching(_read(args.matching), out.graph)
        text = io.write_assignment(decode_matching(inst, m, out))
    else:
        inst, out = _x3c_out(args)
        m = io.parse_matching(_read(args.matching), out.graph)
        text = io.write_cover(decode_cover(inst, m, out))
    _emit(args.out, text)
    return EXIT_OK


def _add_problem_flags(p: argparse.ArgumentParser, problem: str, role: str) -> None:
    if problem == "one-in-three":
        p.add_argument("--cnf", required=True, help="instance in 'p cnf' format")
        p.add_argument("--diameter3", action="store_true", help="add the two hubs that bring the diameter to 3")
        p.add_argument("--c", type=int, default=2, help="target component count (>= 2)")
        if role == "encode":
            p.add_argument("--assignment", required=True, help="'v ... 0' assignment file")
    elif problem == "x3c":
        p.add_argument("--instance", required=True, help="instance in 'p x3c' format")
        p.add_argument("--bounded-degree", action="store_true")
        p.add_argument("--universal-vertex", action="store_true")
        if role == "encode":
            p.add_argument("--cover", required=True, help="one triple per line")
    else:
        p.add_argument("--param", choices=("vc", "dc"), default="vc")
        p.add_argument("--instances", nargs="+", required=True)
        if role == "reduce":
            p.add_argument("--modulator", help="write the modulator vertices here")
        if role == "encode":
            p.add_argument("--index", type=int, required=True, help="1-based instance whose cover is given")
            p.add_argument("--cover", required=True)
    if role == "decode":
        p.add_argument("--matching", required=True)
    p.add_argument("--out", help="output file (default: standard output)")
    if role == "reduce":
        p.add_argument("--names", help="write the vertex role names here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discmatch", description="Exact solvers for disconnected and connected matchings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, c_required=False):
        p.add_argument("--graph", required=True, help="graph in 'p dm' format")
        p.add_argument("--brute-limit", type=int, default=DEFAULT_BRUTE_LIMIT)
        p.add_argument("--separator-limit", type=int, default=DEFAULT_SEPARATOR_LIMIT)
        if c_required:
            p.add_argument("--c", type=int, required=True)

    p = sub.add_parser("solve", help="largest matching with at least c components")
    common(p, True)
    p.add_argument("--k", type=int)
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--td", help="tree decomposition in PACE .td format")
    p.add_argument("--intervals", help="interval model, 'i <v> <l> <r>' lines")
    p.add_argument("--emit-matching")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("connect", help="maximum connected matching")
    common(p)
    p.add_argument("--emit-matching")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("oracle", help="brute-force optimum and witness")
    common(p, True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a matching against k and c")
    common(p)
    p.add_argument("--matching", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("separators", help="list all minimal separators")
    common(p)
    p.set_defaults(func=cmd_separators)

    for role, func in (("reduce", cmd_reduce), ("encode", cmd_encode), ("decode", cmd_decode)):
        p = sub.add_parser(role, help=f"{role} for a hardness construction")
        inner = p.add_subparsers(dest="problem", required=True)
        problems = ("one-in-three", "x3c") if role == "decode" else ("one-in-three", "x3c", "cross-compose")
        for problem in problems:
            q = inner.add_parser(problem)
            _add_problem_flags(q, problem, role)
            q.set_defaults(func=func)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("DISCMATCH_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    func: Callable = args.func
    try:
        return func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"rejected ({exc.reason}): {exc}", file=sys.stderr)
        return EXIT_NO
    except DiscMatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
