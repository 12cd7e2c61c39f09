"""Command-line front end.

Exit codes: 0 success, 1 a primary method disagreed with the oracle,
2 bad input or invalid certificate, 3 refused by a cost guard or oracle limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import generators
from .bench import DEFAULT_DEGENERATE, DEFAULT_GRIDS, DEFAULT_LADDERS, bench_seed, format_csv, run_bench
from .decomposition import (
    TheoremMode,
    cut_vertex_split_poly,
    edge_addition_general,
    edge_addition_restricted,
    independent_cut_split_poly,
    matching_cut_poly,
    vertex_attachment_poly,
)
from .domination import domination_polynomial
from .errors import GraphError, LimitExceeded, PreconditionError
from .graph import Graph, format_edge_list, read_edge_list
from .oracle import DEFAULT_ORACLE_LIMIT
from .polynomial import Polynomial
from .reduction import DEFAULT_DEGREE_GUARD
from .solve import Limits, auto_solver, solve
from .verify import run_verify

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

THEOREM_METHODS = {
    "cut-vertex": "cut_vertex",
    "cut-set": "cut_set",
    "matching-cut": "cut_matching",
    "add-edge": "add_edge",
    "add-edge-general": "add_edge",
    "attach": "attach",
}
METHODS = ["auto", "oracle", "reduction", *THEOREM_METHODS]


# argument parsing helpers

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _edge(text: str) -> tuple[int, int]:
    try:
        a, b = text.strip().split("-")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an edge 'u-v', got {text!r}")


def _edge_list(text: str) -> list[tuple[int, int]]:
    return [_edge(t) for t in text.split(",") if t.strip()]


def _grid_list(text: str) -> list[tuple[int, int]]:
    out = []
    for t in text.split(","):
        try:
            a, b = t.lower().split("x")
            out.append((int(a), int(b)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected sizes like 10x10, got {t!r}")
    return out


def _degenerate_list(text: str) -> list[tuple[int, int]]:
    try:
        k, sizes = text.split(":")
        return [(int(k), int(n)) for n in sizes.split(",") if n]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K:N[,N...], got {text!r}")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file ('n m' header, then 'u v' lines)")
    src.add_argument("--generate", metavar="SPEC", help="generator spec, e.g. ladder:5 or grid:3x4")


def _add_limits(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.add_argument("--degree-guard", type=int, default=DEFAULT_DEGREE_GUARD)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _add_certificates(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[m.value for m in TheoremMode], default="corrected")
    p.add_argument("--cut-vertex", type=int)
    p.add_argument("--cut-set", type=_int_list, metavar="A,B,...")
    p.add_argument("--cut-matching", type=_edge_list, metavar="U-V,...")
    p.add_argument("--attach", type=_int_list, metavar="A,B,...")
    p.add_argument("--add-edge", type=_edge, metavar="U-V")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nbhd", description="Neighborhood and domination polynomials of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="neighborhood polynomial")
    _add_source(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    _add_certificates(p)
    p.add_argument("--trace", action="store_true", help="also print the reduction trace")
    _add_limits(p)

    p = sub.add_parser("domination", help="domination polynomial")
    _add_source(p)
    p.add_argument("--method", choices=["complement", "brute-force"], default="complement")
    _add_limits(p)

    p = sub.add_parser("verify", help="cross-check all applicable methods against the oracle")
    _add_source(p)
    _add_certificates(p)
    _add_limits(p)

    p = sub.add_parser("bench", help="time the reduction on large sparse families (CSV)")
    p.add_argument("--ladder", type=_int_list, metavar="N,...")
    p.add_argument("--grid", type=_grid_list, metavar="AxB,...")
    p.add_argument("--degenerate", type=_degenerate_list, metavar="K:N,...")
    p.add_argument("--seed", type=int, default=None, help="random seed (NBHD_SEED overrides)")
    p.add_argument("--no-timing", action="store_true", help="leave wall_time empty for reproducible output")
    p.add_argument("--check-incremental", action="store_true",
                   help="also rebuild random degenerate polynomials by vertex attachment")

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("spec")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    return parser


def _load(args) -> Graph:
    if args.file is not None:
        return read_edge_list(args.file)
    return generators.generate(args.generate)


def _limits(args) -> Limits:
    return Limits(oracle_limit=args.oracle_limit, degree_guard=args.degree_guard)


def _factors(spec: Optional[str]):
    # product factors are known for generated Cartesian families
    if not spec:
        return None
    family, _, rest = spec.partition(":")
    family = family.strip().lower()
    try:
        if family == "ladder":
            return generators.path(2), generators.path(int(rest))
        if family == "grid":
            a, b = rest.lower().split("x")
            return generators.path(int(a)), generators.path(int(b))
        if family == "prism":
            return generators.cycle(int(rest)), generators.path(2)
    except (ValueError, GraphError):
        return None
    return None


def _emit_poly(poly: Polynomial, as_json: bool, extra: dict, out) -> None:
    if as_json:
        out.write(json.dumps({"polynomial": poly.to_json(), **extra}, sort_keys=True) + "\n")
    else:
        out.write(str(poly) + "\n")


def _compute(args, out) -> int:
    G = _load(args)
    limits = _limits(args)
    for method, field in THEOREM_METHODS.items():
        if getattr(args, field) is not None and args.method != method:
            # add-edge serves both edge-insertion methods
            if not (field == "add_edge" and args.method in ("add-edge", "add-edge-general")):
                raise PreconditionError(f"--{field.replace('_', '-')} requires --method {method}")
    if args.method in ("auto", "oracle", "reduction"):
        sol = solve(G, args.method, limits)
        extra = {"method": sol.method, "n": G.n, "m": G.m}
        if args.trace:
            if sol.trace is None:
                raise PreconditionError("--trace needs the reduction (the oracle was used)")
            extra["trace"] = sol.trace.to_json()
        _emit_poly(sol.polynomial, args.json, extra, out)
        if args.trace and not args.json:
            for step in sol.trace.steps:
                out.write(f"remove {step.vertex} (degree {step.degree}): X = {step.correction}\n")
        return EXIT_OK

    field = THEOREM_METHODS[args.method]
    cert = getattr(args, field)
    if cert is None:
        raise PreconditionError(f"--method {args.method} requires --{field.replace('_', '-')}")
    solver = auto_solver(limits)
    mode = TheoremMode(args.mode)
    if args.method == "cut-vertex":
        poly = cut_vertex_split_poly(G, cert, solver)
    elif args.method == "cut-set":
        poly = independent_cut_split_poly(G, cert, solver)
    elif args.method == "matching-cut":
        poly = matching_cut_poly(G, cert, mode, solver)
    elif args.method == "add-edge":
        poly = edge_addition_restricted(G, *cert, solver=solver)
    elif args.method == "add-edge-general":
        poly = edge_addition_general(G, *cert, mode, solver)
    else:
        poly = vertex_attachment_poly(G, cert, solver)
    extra = {"method": args.method, "n": G.n, "m": G.m}
    if args.method in ("matching-cut", "add-edge-general"):
        extra["mode"] = mode.value
    _emit_poly(poly, args.json, extra, out)
    return EXIT_OK


def _domination(args, out) -> int:
    G = _load(args)
    method = "complement_identity" if args.method == "complement" else "brute_force"
    res = domination_polynomial(G, method, _limits(args))
    extra = {"method": res.method, "n": G.n, "m": G.m}
    if res.strategy:
        extra["strategy"] = res.strategy
    _emit_poly(res.polynomial, args.json, extra, out)
    return EXIT_OK


def _verify(args, out) -> int:
    G = _load(args)
    report = run_verify(
        G,
        _limits(args),
        cut_vertex=args.cut_vertex,
        cut_set=args.cut_set,
        cut_matching=args.cut_matching,
        attach=args.attach,
        add_edges=[args.add_edge] if args.add_edge is not None else None,
        factors=_factors(args.generate),
    )
    if args.json:
        out.write(json.dumps(report.to_json(), sort_keys=True) + "\n")
    else:
        out.write(report.render_text() + "\n")
    return EXIT_OK if report.ok else EXIT_DISAGREE


def _bench(args, out) -> int:
    seed = bench_seed(args.seed if args.seed is not None else 0)
    suites = (args.ladder, args.grid, args.degenerate)
    if all(s is None for s in suites):
        ladders, grids, degenerate = DEFAULT_LADDERS, DEFAULT_GRIDS, DEFAULT_DEGENERATE
    else:
        ladders, grids, degenerate = (s or [] for s in suites)
    rows = run_bench(ladders, grids, degenerate, seed, args.check_incremental)
    out.write(format_csv(rows, timing=not args.no_timing, incremental=args.check_incremental))
    if args.check_incremental and any(r.incremental_ok is False for r in rows):
        return EXIT_DISAGREE
    return EXIT_OK


def _generate(args, out) -> int:
    text = format_edge_list(generators.generate(args.spec))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {
    "compute": _compute,
    "domination": _domination,
    "verify": _verify,
    "bench": _bench,
    "generate": _generate,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except LimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
