"""Command-line interface.

Exit status: 0 on success, 1 for a negative answer when ``--strict`` is
given, 2 for usage, file and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from di9.classical import tautological_consequence
from di9.consequence import di9_consequence
from di9.errors import DI9Error
from di9.formula import parse
from di9.harness import GenParams, run_suite
from di9.trivalent import eval_recursive, settlement, trajectory
from di9.world import Valuation, parse_time, parse_world, render_time, render_world


class UsageError(Exception):
    pass


def _time(text: str):
    try:
        return parse_time(text, allow_always=False)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_world(path: str) -> Valuation:
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read world file {path!r}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"world file {path!r} is not ASCII") from None
    return parse_world(text)


def _assignment_line(a) -> str:
    return " ".join(f"{n}={'T' if w else 'F'}" for n, w in a.items())


def cmd_eval(args) -> int:
    v = _load_world(args.world)
    print(eval_recursive(v, parse(args.formula), args.at))
    return 0


def cmd_trajectory(args) -> int:
    v = _load_world(args.world)
    for t, value in trajectory(v, parse(args.formula), args.probes):
        print(f"{render_time(t)} {value}")
    return 0


def cmd_settle(args) -> int:
    v = _load_world(args.world)
    when, w = settlement(v, parse(args.formula))
    print(f"{render_time(when)} {'T' if w else 'F'}")
    return 0


def cmd_taut(args) -> int:
    holds, countermodel = tautological_consequence([], parse(args.formula))
    if holds:
        print("tautology")
        return 0
    print("not-tautology")
    print(f"countermodel {_assignment_line(countermodel)}")
    return 1 if args.strict else 0


def cmd_entails(args) -> int:
    premises = [parse(p) for p in args.premise]
    verdict = di9_consequence(premises, parse(args.conclusion))
    if verdict.holds:
        print("holds")
        return 0
    v, j = verdict.countermodel
    print("fails")
    sys.stdout.write(render_world(v))
    print(f"# at {render_time(j)}")
    return 1 if args.strict else 0


def cmd_fuzz(args) -> int:
    try:
        params = GenParams(
            max_atoms=args.max_atoms,
            max_depth=args.max_depth,
            seed=args.seed,
            iterations=args.iterations,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_suite(params)
    sys.stdout.write(report.render_text())
    return 1 if args.strict and not report.ok else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="di9", description="Temporal trivalent semantics for propositional logic."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("eval", help="value of a formula at a moment (T, F or O)")
    p.add_argument("--world", required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--at", required=True, type=_time)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("trajectory", help="values of a formula at increasing moments")
    p.add_argument("--world", required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--probes", required=True, nargs="+", type=_time)
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("settle", help="earliest moment a formula has a truth value")
    p.add_argument("--world", required=True)
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_settle)

    p = sub.add_parser("taut", help="is the formula a tautology")
    p.add_argument("--formula", required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 if not a tautology")
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("entails", help="do the premises entail the conclusion")
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("--conclusion", required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 if the consequence fails")
    p.set_defaults(func=cmd_entails)

    defaults = GenParams()
    p = sub.add_parser("fuzz", help="run the randomized property suite")
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--iterations", type=int, default=defaults.iterations)
    p.add_argument("--max-atoms", type=int, default=defaults.max_atoms)
    p.add_argument("--max-depth", type=int, default=defaults.max_depth)
    p.add_argument("--strict", action="store_true", help="exit 1 if any property fails")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DI9Error, UsageError) as exc:
        print(f"di9 {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
