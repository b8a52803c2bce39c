"""Command-line interface.

Exit codes: 0 success (``check``: the pair is a vertex), 1 usage error,
2 parse or validation error, 3 ``check``: the pair is not a vertex,
4 internal LP error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .core import DimensionMismatchError, format_scalar
from .engine import (
    AlternativeDecomposition,
    SeparatingHyperplane,
    UniqueDecomposition,
    InternalLPError,
    classify_pair,
    convex_hull_2d,
    extreme_points,
    minkowski_sum,
)
from .formats import ReportError, emit_report, format_points, read_polytope
from .lp import SolverError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NOT_VERTEX = 3
EXIT_INTERNAL = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vminkowski",
        description="Exact vertices of Minkowski sums of V-polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sum", help="vertices of A + B")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--method", choices=["separation", "uniqueness"], default="uniqueness")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")

    p = sub.add_parser(
        "check", help="classify one pair (u, v); indices are 0-based rows of the input files"
    )
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--u", required=True, type=int, metavar="IDX")
    p.add_argument("--v", required=True, type=int, metavar="IDX")
    p.add_argument("--method", choices=["separation", "uniqueness"], default="uniqueness")

    p = sub.add_parser("extreme", help="drop non-extreme points of a cloud")
    p.add_argument("--points", required=True, metavar="FILE")

    p = sub.add_parser("hull2d", help="planar convex hull (monotone chain)")
    p.add_argument("--points", required=True, metavar="FILE")
    return parser


def _row(values) -> str:
    return " ".join(format_scalar(x) for x in values)


def format_verdict(verdict) -> str:
    pair = verdict.pair
    lines = [
        f"pair u={pair.u} v={pair.v}",
        f"sum {_row(pair.sum)}",
        f"method {verdict.method}",
        f"f* = {format_scalar(verdict.f_star)}",
        f"vertex {'yes' if verdict.is_vertex else 'no'}",
    ]
    cert = verdict.certificate
    if isinstance(cert, SeparatingHyperplane):
        lines += ["certificate separating-hyperplane",
                  f"gamma {_row(cert.gamma)}", f"offset {format_scalar(cert.offset)}"]
    elif isinstance(cert, AlternativeDecomposition):
        lines += ["certificate alternative-decomposition",
                  f"alpha {_row(cert.alpha)}", f"beta {_row(cert.beta)}"]
    elif isinstance(cert, UniqueDecomposition):
        lines += ["certificate unique-decomposition",
                  f"multipliers {_row(cert.multipliers)}"]
    return "\n".join(lines) + "\n"


def _cmd_sum(args) -> int:
    A, B = read_polytope(args.a), read_polytope(args.b)
    if A.dim != B.dim:
        raise DimensionMismatchError(f"A is in R^{A.dim} but B is in R^{B.dim}")
    if args.jobs < 1:
        raise _UsageError("--jobs must be at least 1")
    start = time.perf_counter()
    result = minkowski_sum(A, B, method=args.method, n_jobs=args.jobs)
    elapsed = time.perf_counter() - start
    text = emit_report(result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.timing:
        print(f"elapsed={elapsed:.6f}", file=sys.stderr)
    return EXIT_OK


def _cmd_check(args) -> int:
    A, B = read_polytope(args.a), read_polytope(args.b)
    if A.dim != B.dim:
        raise DimensionMismatchError(f"A is in R^{A.dim} but B is in R^{B.dim}")
    if not (0 <= args.u < len(A) and 0 <= args.v < len(B)):
        raise IndexError(f"pair ({args.u}, {args.v}) out of range for k={len(A)}, l={len(B)}")
    verdict = classify_pair(A, B, args.u, args.v, args.method)
    sys.stdout.write(format_verdict(verdict))
    return EXIT_OK if verdict.is_vertex else EXIT_NOT_VERTEX


def _cmd_extreme(args) -> int:
    P = read_polytope(args.points)
    kept, _ = extreme_points(P.points)
    sys.stdout.write(format_points(kept, P.dim))
    return EXIT_OK


def _cmd_hull2d(args) -> int:
    P = read_polytope(args.points)
    if P.dim != 2:
        raise DimensionMismatchError(f"hull2d needs planar points, got R^{P.dim}")
    sys.stdout.write(format_points(convex_hull_2d(P.points), 2))
    return EXIT_OK


_COMMANDS = {"sum": _cmd_sum, "check": _cmd_check, "extreme": _cmd_extreme, "hull2d": _cmd_hull2d}


def cli_main(argv=None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"vminkowski: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalLPError, SolverError, ReportError) as exc:
        print(f"vminkowski: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, IndexError, OSError) as exc:
        print(f"vminkowski: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(cli_main())
