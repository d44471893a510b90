"""Command-line interface.

Subcommands: verify-space, minimal-s, check-functions, check-contraction,
solve, replicate.  Reports are emitted as text or canonical JSON carrying
the same data.  Exit status: 0 on pass/converged, 1 on fail/counterexample,
2 on input errors; `solve` uses 0 for a fixed point, 1 for a periodic
orbit, and 3 when the iteration budget runs out (2 stays reserved for
input errors).

The FPRECT_PRECISION environment variable overrides the number of
significant digits used for non-rational evaluation (default 50).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from fractions import Fraction

from mpmath import mp

from . import configio
from .replicate import CASE_IDS, replicate, replicate_all, replication_to_dict
from .contraction import check_all
from .errors import FprectError, ParseError
from .exact import format_rational, parse_rational
from .functions import (
    TripledSpec,
    check_monotone_tripled,
    default_grid_1d,
    rational_grid,
    verify_altering,
    verify_cclass,
    verify_lsc,
    verify_phi_u,
    verify_usc,
)
from .solver import SolveStatus, check_vanishing, picard_iterate, verify_decreasing
from .spaces import (
    check_b_rectangular,
    check_b_triangle,
    check_rectangular,
    check_triangle,
    minimal_b_rect_s,
)

def _pretty(v) -> str:
    """Human-readable value for text reports (JSON stays canonical p/q)."""
    if isinstance(v, Fraction):
        return str(v)
    return mp.nstr(v, 20)


EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_MAX_ITER = 3

AXIOM_CHECKS = {
    "triangle": lambda space, s, cap: check_triangle(space, witness_cap=cap),
    "b-triangle": lambda space, s, cap: check_b_triangle(space, s, witness_cap=cap),
    "rectangular": lambda space, s, cap: check_rectangular(space, witness_cap=cap),
    "b-rectangular": lambda space, s, cap: check_b_rectangular(space, s,
                                                               witness_cap=cap),
}


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(configio.canonical_json(payload))
    else:
        print("\n".join(text_lines))


def _witness_lines(report) -> list[str]:
    lines = []
    for w in report.witnesses:
        tup = ", ".join(w.labels)
        lines.append(f"  ({tup}): {w.lhs} > {w.rhs}")
    if report.witness_cap is not None and report.total_violations > len(report.witnesses):
        lines.append(f"  ... {report.total_violations - len(report.witnesses)}"
                     f" more (use --all-witnesses)")
    return lines


def _cmd_verify_space(args) -> int:
    space = configio.space_from_dict(configio.load_json(args.space))
    s = parse_rational(args.s) if args.s else Fraction(3)
    cap = None if args.all_witnesses else args.witness_cap
    report = AXIOM_CHECKS[args.axiom](space, s, cap)
    lines = [
        f"axiom: {report.axiom.value}",
        f"points: {len(space)}",
        f"parameter s: {report.parameter_s}",
        f"verdict: {'PASS' if report.verdict else 'FAIL'}",
        f"violations: {report.total_violations}",
    ]
    lines += _witness_lines(report)
    _emit(args, configio.axiom_report_to_dict(report), lines)
    return EXIT_PASS if report.verdict else EXIT_FAIL


def _cmd_minimal_s(args) -> int:
    space = configio.space_from_dict(configio.load_json(args.space))
    s_star = minimal_b_rect_s(space)
    payload = {"minimal_s": format_rational(s_star), "points": len(space)}
    _emit(args, payload, [f"minimal coefficient: {s_star}"])
    return EXIT_PASS


def _function_report(args, spec) -> int:
    grid = None
    if args.step:
        step = parse_rational(args.step)
        grid = rational_grid(Fraction(0), Fraction(10), step)
    tol = parse_rational(args.tol) if args.tol else None
    cap = None if args.all_witnesses else args.witness_cap
    prop = args.property
    if prop == "altering":
        report = verify_altering(spec, grid, witness_cap=cap)
    elif prop == "phi-u":
        report = verify_phi_u(spec, grid, witness_cap=cap)
    elif prop == "cclass":
        report = verify_cclass(spec, grid, tolerance=tol, witness_cap=cap)
    elif prop == "lsc":
        report = verify_lsc(spec, grid or default_grid_1d(),
                            tolerance=tol or Fraction(1, 16), witness_cap=cap)
    elif prop == "usc":
        report = verify_usc(spec, grid or default_grid_1d(),
                            tolerance=tol or Fraction(1, 16), witness_cap=cap)
    else:
        raise ParseError(f"--property required for a single function spec")
    lines = [f"property: {report.property}",
             f"grid: {report.grid}",
             f"verdict: {'PASS' if report.verdict else 'FAIL'}"]
    lines += [f"  note: {n}" for n in report.notes]
    lines += [f"  witness {w.args}: {w.values} ({w.reason})"
              for w in report.witnesses]
    _emit(args, configio.property_report_to_dict(report), lines)
    return EXIT_PASS if report.verdict else EXIT_FAIL


def _cmd_check_functions(args) -> int:
    data = configio.load_json(args.functions)
    if isinstance(data, dict) and {"psi", "phi", "F"} <= set(data):
        triple = TripledSpec(
            psi=configio.function_from_dict(data["psi"], "psi"),
            phi=configio.function_from_dict(data["phi"], "phi"),
            F=configio.function_from_dict(data["F"], "F"))
        grid = None
        if args.step:
            grid = rational_grid(Fraction(0), Fraction(4),
                                 parse_rational(args.step))
        cap = None if args.all_witnesses else args.witness_cap
        reports = [
            verify_altering(triple.psi, witness_cap=cap),
            verify_phi_u(triple.phi, witness_cap=cap),
            verify_cclass(triple.F, witness_cap=cap),
            check_monotone_tripled(triple, grid, witness_cap=cap),
        ]
        payload = {"reports": [configio.property_report_to_dict(r)
                               for r in reports],
                   "verdict": all(r.verdict for r in reports)}
        lines = []
        for r in reports:
            lines.append(f"{r.property}: {'PASS' if r.verdict else 'FAIL'}"
                         f"  [{r.grid}]")
            lines += [f"  witness {w.args}: {w.values} ({w.reason})"
                      for w in r.witnesses]
        _emit(args, payload, lines)
        return EXIT_PASS if payload["verdict"] else EXIT_FAIL
    spec = configio.function_from_dict(data, "function")
    return _function_report(args, spec)


def _cmd_check_contraction(args) -> int:
    inst = configio.instance_from_dict(configio.load_json(args.instance),
                                       base_dir=Path(args.instance).parent)
    tol = parse_rational(args.tol) if args.tol else Fraction(0)
    report = check_all(inst, tolerance=tol)
    worst = report.worst_pair
    lines = [f"pairs checked: {len(report.verdicts)} (ordered, including x = y)",
             f"global verdict: {'PASS' if report.global_holds else 'FAIL'}"]
    if worst:
        lines.append(f"worst pair: ({worst.x}, {worst.y}) margin "
                     f"{_pretty(worst.margin)}")
    failing = [v for v in report.verdicts if not v.holds and v.x <= v.y]
    for v in failing[:args.witness_cap]:
        lines.append(f"  FAIL ({v.x}, {v.y}): lhs {_pretty(v.lhs)}"
                     f" > rhs {_pretty(v.rhs)}")
    _emit(args, configio.check_report_to_dict(report), lines)
    return EXIT_PASS if report.global_holds else EXIT_FAIL


def _cmd_solve(args) -> int:
    inst = configio.instance_from_dict(configio.load_json(args.instance),
                                       base_dir=Path(args.instance).parent)
    tol = parse_rational(args.tol) if args.tol else Fraction(0)
    result = picard_iterate(inst, getattr(args, "from"), max_iter=args.max_iter,
                            tol=tol)
    tr = result.trace
    lines = [f"status: {result.status.value}"]
    if result.point is not None:
        lines.append(f"fixed point: {result.point} "
                     f"(reached after {result.iterations} steps)")
    if result.period is not None:
        lines.append(f"period: {result.period}")
    header = f"{'n':>3}  {'x_n':>10}  {'d(x_n,x_n+1)':>14}  " \
             f"{'d(x_n,x_n+2)':>14}  {'weight':>10}  {'augmented':>12}"
    lines.append(header)
    for i, lab in enumerate(tr.orbit):
        step = str(tr.step_dist[i]) if i < len(tr.step_dist) else "-"
        skip = str(tr.skip_dist[i]) if i < len(tr.skip_dist) else "-"
        aug = _pretty(tr.augmented[i]) if i < len(tr.augmented) else "-"
        lines.append(f"{i:>3}  {lab:>10}  {step:>14}  {skip:>14}  "
                     f"{_pretty(tr.weights[i]):>10}  {aug:>12}")
    decreasing = verify_decreasing(tr)
    vanishing = check_vanishing(tr, tol)
    lines.append(f"augmented sequence nonincreasing: {decreasing.ok}")
    lines.append(f"tails vanish (step/skip/weights): {vanishing.step.ok}/"
                 f"{vanishing.skip.ok}/{vanishing.weights.ok}")
    payload = configio.solve_result_to_dict(result)
    payload["decreasing"] = decreasing.ok
    payload["vanishing"] = configio.vanishing_to_dict(vanishing)
    _emit(args, payload, lines)
    if result.status is SolveStatus.FIXED_POINT:
        return EXIT_PASS
    if result.status is SolveStatus.PERIODIC:
        return EXIT_FAIL
    return EXIT_MAX_ITER


def _cmd_replicate(args) -> int:
    if args.case == "ALL":
        reports = replicate_all()
    else:
        reports = [replicate(args.case)]
    lines = []
    for rep in reports:
        lines.append(f"case {rep.case}: {'PASS' if rep.ok else 'FAIL'} "
                     f"({len(rep.checks)} checks)")
        for c in rep.checks:
            mark = "ok " if c.ok else "MISMATCH"
            lines.append(f"  [{mark}] {c.name}: expected {c.expected}, "
                         f"got {c.actual}  ({c.source})")
    payload = {"cases": [replication_to_dict(r) for r in reports]}
    _emit(args, payload, lines)
    return EXIT_PASS if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fprect",
        description="Exact axiom checking, contraction verification and "
                    "orbit solving on finite generalized metric spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--tol", default=None, help="comparison tolerance (rational)")
        p.add_argument("--step", default=None, help="grid step override (rational)")
        p.add_argument("--witness-cap", type=int, default=16)
        p.add_argument("--all-witnesses", action="store_true",
                       help="report every violation instead of the first 16")

    p = sub.add_parser("verify-space", help="check one axiom of the hierarchy")
    p.add_argument("--space", required=True)
    p.add_argument("--axiom", required=True, choices=sorted(AXIOM_CHECKS))
    p.add_argument("--s", default=None, help="coefficient for the b-variants")
    common(p)
    p.set_defaults(func=_cmd_verify_space)

    p = sub.add_parser("minimal-s", help="tightest four-point coefficient")
    p.add_argument("--space", required=True)
    common(p)
    p.set_defaults(func=_cmd_minimal_s)

    p = sub.add_parser("check-functions",
                       help="verify function-class axioms on a grid")
    p.add_argument("--functions", required=True,
                   help="function spec file, or {psi, phi, F} triple file")
    p.add_argument("--property", default=None,
                   choices=("altering", "phi-u", "cclass", "lsc", "usc"),
                   help="which check to run for a single function spec")
    common(p)
    p.set_defaults(func=_cmd_check_functions)

    p = sub.add_parser("check-contraction",
                       help="verify the contraction inequality on all pairs")
    p.add_argument("--instance", required=True)
    common(p)
    p.set_defaults(func=_cmd_check_contraction)

    p = sub.add_parser("solve", help="iterate the self-map from a start point")
    p.add_argument("--instance", required=True)
    p.add_argument("--from", required=True, help="start point label")
    p.add_argument("--max-iter", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("replicate", help="run a bundled reference case")
    p.add_argument("case", choices=CASE_IDS + ("ALL",))
    common(p)
    p.set_defaults(func=_cmd_replicate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FprectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
