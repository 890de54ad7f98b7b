"""Command line interface: ``gbinterp solve | check | sample``.

Exit codes: 0 success, 1 usage error, 2 bad input data, 3 solver error or
failed verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import (
    DimensionError, DuplicateNodeError, InterpolationError, InvalidDirectionError, ModeError,
    ProblemFileError,
)
from .problem import dump_json, load_solution, parse_problem, solution_to_dict
from .sampling import parse_grid, read_reference, sample
from .solver import interpolate, verify

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_SOLVER = 0, 1, 2, 3

_DATA_ERRORS = (ProblemFileError, DimensionError, DuplicateNodeError, InvalidDirectionError, ModeError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    problem = parse_problem(args.problem, order=args.order, mode=args.mode)
    solution = interpolate(problem.nodes, problem.mode, problem.order)
    _write(dump_json(solution_to_dict(solution, problem.variables)), args.out)
    report = sys.stdout if args.out else sys.stderr
    print(f"mode: {problem.mode}", file=report)
    print(f"order: {problem.order}", file=report)
    print(f"staircase size: {len(solution.staircase)}", file=report)
    print(f"conditions: {solution.system.shape[0]}", file=report)
    print(f"rank: {solution.rank}", file=report)
    print(f"free parameters: {solution.free_parameters}", file=report)
    print(f"polynomial: {solution.polynomial.to_text(problem.variables, problem.order)}", file=report)
    return EXIT_OK


def cmd_check(args) -> int:
    problem = parse_problem(args.problem)
    sol = load_solution(args.solution)
    if len(sol.variables) != problem.nvars:
        raise DimensionError(f"solution has {len(sol.variables)} variables, problem {problem.nvars}")
    report = verify(sol.polynomial, problem.nodes)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_SOLVER


def cmd_sample(args) -> int:
    sol = load_solution(args.solution)
    axes = parse_grid(args.grid, len(sol.variables))
    reference = read_reference(args.reference, sol.variables) if args.reference else None
    result = sample(sol.polynomial, axes, sol.variables, reference)
    _write(result.to_csv(), args.out)
    if reference is not None:
        print(f"max |difference|: {result.max_abs_difference!r}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gbinterp", description="Exact multivariate Lagrange, Hermite and Birkhoff interpolation.")
    parser.add_argument("--version", action="version", version=f"gbinterp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an interpolation problem file")
    p.add_argument("problem")
    p.add_argument("--order", choices=["lex", "grlex", "grevlex"])
    p.add_argument("--mode", choices=["lagrange", "hermite", "birkhoff"])
    p.add_argument("--out", help="solution JSON path (default: stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a solution file against a problem file")
    p.add_argument("problem")
    p.add_argument("solution")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sample", help="evaluate a solution on a grid")
    p.add_argument("solution")
    p.add_argument("--grid", required=True, help="per-variable v | lo:hi:n | lo:hi:n:open, comma separated")
    p.add_argument("--reference", help="CSV with variable columns and a 'reference' column")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DATA_ERRORS as exc:
        print(f"gbinterp: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except InterpolationError as exc:
        print(f"gbinterp: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
