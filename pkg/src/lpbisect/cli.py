"""Command-line entry point: ``lpbisect solve`` and ``lpbisect gen``."""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .bisection import solve
from .errors import LPError
from .generate import generate_random_instance
from .lpt import parse_lp_text, render_lp_text
from .model import Status
from .report import Comparison, SolverConfig, write_outcome
from .simplex import simplex_solve
from .tolerances import DEFAULT_TOLERANCES

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_DISAGREEMENT = 4

STATUS_EXIT = {
    Status.OPTIMAL: EXIT_OK,
    Status.INFEASIBLE: EXIT_INFEASIBLE,
    Status.UNBOUNDED: EXIT_UNBOUNDED,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpbisect",
        description="Linear programs solved by bisection on the objective level.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an LPT file")
    p.add_argument("file", help="LPT file, or - for stdin")
    p.add_argument("--method", choices=("bisect", "simplex", "both"), default="bisect")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCES.epsilon, metavar="EPS",
                   help="bracket width at which bisection stops (default %(default)g)")
    p.add_argument("--max-iter", type=int, default=DEFAULT_TOLERANCES.max_bisections,
                   metavar="N", help="bisection budget (default %(default)d)")
    p.add_argument("--bracket", choices=("doubling", "paper"), default="doubling",
                   help="how the first bracket is found")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--trace", action="store_true", help="list every bisection level tested")

    g = sub.add_parser("gen", help="print a random LPT instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--allow-negative-b", action="store_true",
                   help="draw b from [-10, 10] so the origin may be infeasible")
    return parser


def config_from_args(args) -> SolverConfig:
    tolerances = replace(DEFAULT_TOLERANCES, epsilon=args.tol, max_bisections=args.max_iter)
    return SolverConfig(
        method=args.method,
        tolerances=tolerances,
        bracket_mode="paper_halving" if args.bracket == "paper" else "doubling",
        output="json" if args.json else "human",
        trace_enabled=args.trace,
    )


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def run_solve(args) -> int:
    cfg = config_from_args(args)
    lp = parse_lp_text(_read(args.file), name=args.file)
    tol = cfg.tolerances

    if cfg.method == "simplex":
        result = simplex_solve(lp, tol)
        code = STATUS_EXIT[result.status]
    else:
        result = solve(lp, tol, cfg.bracket_mode)
        code = STATUS_EXIT[result.status]
        if cfg.method == "both":
            result = Comparison(result, simplex_solve(lp, tol))
            if not result.agrees(tol.epsilon):
                code = EXIT_DISAGREEMENT

    sys.stdout.write(write_outcome(result, cfg))
    return code


def run_gen(args) -> int:
    lp = generate_random_instance(args.n, args.m, args.seed, args.allow_negative_b)
    comment = f"random instance n={args.n} m={args.m} seed={args.seed}"
    if args.allow_negative_b:
        comment += " (negative b allowed)"
    sys.stdout.write(render_lp_text(lp, comment))
    return EXIT_OK


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        if args.command == "solve":
            return run_solve(args)
        return run_gen(args)
    except (LPError, ValueError, OSError) as exc:
        print(f"lpbisect: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
