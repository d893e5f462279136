"""Command line front end.

Exit codes: 0 on success, 1 on domain failures (invalid timetable,
failed verification), 2 on usage or file errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .auxgraph import build_aux_graph, emit_dot
from .pipeline import solve_bmp, verify
from .timetable import (
    ValidationError,
    format_ha,
    format_timetable,
    generate_circle,
    parse_ha,
    parse_timetable,
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="breakmin",
        description="Break-minimal home/away assignment for single round-robin timetables.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="compute an assignment minimizing breaks")
    sp.add_argument("--input", required=True, type=Path, help="timetable CSV")
    sp.add_argument(
        "--solver",
        choices=("exact", "brute", "heuristic"),
        default="exact",
        help="exact proves minimality, heuristic only bounds it",
    )
    sp.add_argument("--seed", type=int, default=0, help="heuristic random seed")
    sp.add_argument("--output", type=Path, help="assignment CSV path (default stdout)")
    sp.add_argument("--stats", type=Path, help="also write the report as JSON here")
    sp.add_argument(
        "--verify",
        action="store_true",
        help="audit the emitted assignment before exiting",
    )

    gp = sub.add_parser("gen", help="generate a valid timetable")
    gp.add_argument("--teams", required=True, type=int, help="even team count >= 4")
    gp.add_argument("--seed", type=int, default=None, help="permute labels and slots")
    gp.add_argument("--output", type=Path, help="timetable CSV path (default stdout)")

    cp = sub.add_parser("check", help="validate a timetable, or audit an assignment")
    cp.add_argument("--timetable", required=True, type=Path)
    cp.add_argument("--assignment", type=Path, help="home/away CSV to audit")
    cp.add_argument("--claimed", type=int, default=None, help="expected break count")

    dp = sub.add_parser("graph", help="emit the auxiliary graph in DOT form")
    dp.add_argument("--input", required=True, type=Path, help="timetable CSV")
    dp.add_argument("--output", type=Path, help="DOT path (default stdout)")
    return p


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _run_solve(args: argparse.Namespace) -> int:
    tt = parse_timetable(args.input.read_text())
    report = solve_bmp(tt, solver=args.solver, seed=args.seed)
    _emit(format_ha(report.assignment), args.output)
    if args.stats:
        args.stats.write_text(report.to_json() + "\n")
    print(
        f"b_min={report.b_min} oct_size={report.oct_size} "
        f"solver={report.solver} optimal={report.optimal}",
        file=sys.stderr,
    )
    if args.verify:
        audit = verify(tt, report.assignment, claimed=report.b_min)
        for c in audit.checks:
            print(f"{'ok' if c.passed else 'FAIL'} {c.name}: {c.detail}", file=sys.stderr)
        if not audit.ok:
            return 1
    return 0


def _run_gen(args: argparse.Namespace) -> int:
    tt = generate_circle(args.teams, args.seed)
    _emit(format_timetable(tt), args.output)
    return 0


def _run_check(args: argparse.Namespace) -> int:
    text = args.timetable.read_text()
    if args.assignment is None:
        try:
            tt = parse_timetable(text)
        except ValidationError as exc:
            for v in exc.violations:
                print(f"violation {v.rule} at ({v.team},{v.slot}): {v.detail}")
            return 1
        print(f"timetable ok: teams={tt.n_teams} slots={tt.n_slots}")
        return 0
    tt = parse_timetable(text)
    z = parse_ha(args.assignment.read_text())
    audit = verify(tt, z, claimed=args.claimed)
    if audit.breaks is not None:
        print(f"breaks={audit.breaks.total}")
    for c in audit.checks:
        print(f"{'ok' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    return 0 if audit.ok else 1


def _run_graph(args: argparse.Namespace) -> int:
    tt = parse_timetable(args.input.read_text())
    _emit(emit_dot(build_aux_graph(tt)), args.output)
    return 0


_COMMANDS = {
    "solve": _run_solve,
    "gen": _run_gen,
    "check": _run_check,
    "graph": _run_graph,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
