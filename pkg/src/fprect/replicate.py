"""End-to-end replication of the bundled reference cases.

Each case runs a pipeline on the reference fixtures and compares every
intermediate against expected exact values embedded here; mismatches are
listed field by field.  Cases are hermetic: fixtures are built in code, no
files or randomness are involved, and reruns produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import reference
from .contraction import check_all, check_pair
from .exact import is_exact
from .functions import (
    check_monotone_tripled,
    evaluate,
    verify_cclass,
)
from .solver import (
    SolveStatus,
    check_vanishing,
    exhaustive_solve,
    uniqueness_scan,
    verify_decreasing,
    verify_fixed_point,
)
from .spaces import (
    check_b_rectangular,
    check_b_triangle,
    check_rectangular,
    check_triangle,
)

EX2_SPACE = "EX2_SPACE"
MAIN_SPACE_NEGATIVES = "MAIN_SPACE_NEGATIVES"
MAIN_CONTRACTION = "MAIN_CONTRACTION"
MAIN_SOLVE = "MAIN_SOLVE"
CCLASS_CATALOG = "CCLASS_CATALOG"
MONOTONE_TRIPLED = "MONOTONE_TRIPLED"

CASE_IDS = (EX2_SPACE, MAIN_SPACE_NEGATIVES, MAIN_CONTRACTION, MAIN_SOLVE,
            CCLASS_CATALOG, MONOTONE_TRIPLED)


@dataclass(frozen=True)
class FieldCheck:
    """One expected-vs-actual comparison with its fixture locator."""

    name: str
    expected: str
    actual: str
    ok: bool
    source: str


@dataclass
class ReplicationReport:
    case: str
    checks: list[FieldCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def mismatches(self) -> list[FieldCheck]:
        return [c for c in self.checks if not c.ok]


class _Recorder:
    def __init__(self, case: str):
        self.report = ReplicationReport(case)

    def expect(self, name: str, expected, actual, source: str):
        ok = expected == actual
        self.report.checks.append(FieldCheck(
            name=name, expected=str(expected), actual=str(actual),
            ok=ok, source=source))

    def expect_true(self, name: str, actual: bool, source: str):
        self.expect(name, True, bool(actual), source)


def _run_ex2_space() -> ReplicationReport:
    rec = _Recorder(EX2_SPACE)
    space = reference.ex2_space()
    rec.expect("point_count", 15, len(space), "six-point family, grid step 1/8")
    report = check_b_rectangular(space, Fraction(3))
    rec.expect_true("b_rectangular_s3", report.verdict,
                    "six-point family: four-point inequality at coefficient 3")
    rec.expect("violations", 0, report.total_violations,
               "six-point family: no violating quadruple")
    return rec.report


def _run_main_space_negatives() -> ReplicationReport:
    rec = _Recorder(MAIN_SPACE_NEGATIVES)
    space = reference.main_space()
    half = Fraction(1, 2)

    tri = check_triangle(space, witness_cap=None)
    rec.expect_true("triangle_fails", not tri.verdict,
                    "four-point family: separation item 1")
    hit = [w for w in tri.witnesses
           if w.labels == ("1/5", "1/16", "1/9")]
    rec.expect_true("triangle_witness_found", bool(hit),
                    "triple (1/5, 1/16, 1/9)")
    if hit:
        rec.expect("triangle_lhs", half, hit[0].lhs, "separation item 1")
        rec.expect("triangle_rhs", Fraction(3, 20), hit[0].rhs,
                   "separation item 1: 1/2 > 3/20")

    btri = check_b_triangle(space, Fraction(3), witness_cap=None)
    rec.expect_true("b_triangle_s3_fails", not btri.verdict,
                    "four-point family: separation item 2")
    hit = [w for w in btri.witnesses if w.labels == ("1/5", "1/16", "1/9")]
    rec.expect_true("b_triangle_witness_found", bool(hit),
                    "triple (1/5, 1/16, 1/9)")
    if hit:
        rec.expect("b_triangle_lhs", half, hit[0].lhs, "separation item 2")
        rec.expect("b_triangle_rhs", Fraction(9, 20), hit[0].rhs,
                   "separation item 2: 1/2 > 9/20")

    rect = check_rectangular(space, witness_cap=None)
    rec.expect_true("rectangular_fails", not rect.verdict,
                    "four-point family: separation item 3")
    hit = [w for w in rect.witnesses
           if w.labels == ("1/5", "1/16", "0", "1/9")]
    rec.expect_true("rectangular_witness_found", bool(hit),
                    "quadruple (1/5, 1/16, 0, 1/9)")
    if hit:
        rec.expect("rectangular_lhs", half, hit[0].lhs, "separation item 3")
        rec.expect("rectangular_rhs", Fraction(1, 4), hit[0].rhs,
                   "separation item 3: 1/2 > 1/4")

    brect = check_b_rectangular(space, Fraction(3))
    rec.expect_true("b_rectangular_s3", brect.verdict,
                    "four-point family: coefficient 3 suffices")
    return rec.report


def _run_main_contraction() -> ReplicationReport:
    rec = _Recorder(MAIN_CONTRACTION)
    inst = reference.main_instance()

    same_b = check_pair(inst, "1/2", "1/2")
    rec.expect("lhs_interval_pair", Fraction(3, 16), same_b.lhs,
               "case IV left side")
    mixed = check_pair(inst, "0", "1/2")
    rec.expect("lhs_mixed_pair", Fraction(123, 160), mixed.lhs,
               "case II left side")
    rec.expect("M_mixed_pair", Fraction(193, 256), mixed.m_value,
               "case II orbital bound")
    rec.expect("rhs_mixed_pair", Fraction(4439, 4096), mixed.rhs,
               "case II bound product 23/16 * 193/256")
    if is_exact(mixed.m_value) and mixed.m_value != 0:
        rec.expect("rhs_factor", Fraction(23, 16), mixed.rhs / mixed.m_value,
                   "combined coefficient 3/2 - 1/16")

    bound = Fraction(59, 100)
    product = evaluate(inst.F,
                       evaluate(inst.psi, bound),
                       evaluate(inst.control_phi, bound))
    rec.expect("case_ii_lower_product", Fraction(1357, 1600), product,
               "case II bound product 23/16 * 59/100")
    rec.expect_true("lower_product_dominates",
                    product >= Fraction(123, 160),
                    "case II comparison 1357/1600 >= 123/160")

    report = check_all(inst)
    rec.expect_true("global_holds", report.global_holds,
                    "all ordered pairs satisfy the condition")
    return rec.report


def _run_main_solve() -> ReplicationReport:
    rec = _Recorder(MAIN_SOLVE)
    inst = reference.main_instance()
    results = exhaustive_solve(inst)
    all_fixed = all(r.status is SolveStatus.FIXED_POINT and r.point == "0"
                    for r in results.values())
    rec.expect_true("every_start_reaches_zero", all_fixed,
                    "orbit iteration from each of the 21 points")
    half_orbit = results["1/2"].trace.orbit
    rec.expect("orbit_from_half", "1/2 -> 1/16 -> 0", " -> ".join(half_orbit[:3]),
               "three-step orbit")
    rec.expect("uniqueness_scan", ["0"], uniqueness_scan(inst),
               "unique fixed point")
    fp = verify_fixed_point(inst, "0")
    rec.expect_true("fixed_point_distance", fp.distance_ok, "d(0, T0) = 0")
    rec.expect_true("fixed_point_weight", fp.weight_ok, "weight vanishes at 0")
    diags_ok = all(
        verify_decreasing(r.trace).ok and check_vanishing(r.trace).ok
        for r in results.values())
    rec.expect_true("diagnostics", diags_ok,
                    "monotone augmented steps and vanishing tails")
    return rec.report


def _run_cclass_catalog() -> ReplicationReport:
    rec = _Recorder(CCLASS_CATALOG)
    for spec in reference.catalog_compliant_specs():
        report = verify_cclass(spec)
        rec.expect_true(f"{spec.catalog}_passes", report.verdict,
                        f"combinator axioms for {spec.catalog}")
        if spec.catalog == "cclass_1":
            rec.expect_true("cclass_1_equality_locus",
                            all(t == 0 for _, t in report.equality_samples)
                            and bool(report.equality_samples),
                            "difference combinator: equality only at t = 0")
        if spec.catalog == "cclass_2":
            rec.expect_true("cclass_2_equality_locus",
                            all(s == 0 for s, _ in report.equality_samples)
                            and bool(report.equality_samples),
                            "scaling combinator: equality only at s = 0")
    return rec.report


def _run_monotone_tripled() -> ReplicationReport:
    rec = _Recorder(MONOTONE_TRIPLED)
    good = check_monotone_tripled(reference.monotone_triple())
    rec.expect_true("monotone_triple_passes", good.verdict,
                    "root weight triple")
    bad = check_monotone_tripled(reference.non_monotone_triple())
    rec.expect_true("square_weight_triple_fails", not bad.verdict,
                    "square weight triple")
    rec.expect_true("witness_found", bool(bad.witnesses),
                    "grid search over [0, 4] step 1/16")
    triple = reference.non_monotone_triple()
    x, y = Fraction(1, 4), Fraction(2)
    gx = evaluate(triple.F, evaluate(triple.psi, x), evaluate(triple.phi, x))
    gy = evaluate(triple.F, evaluate(triple.psi, y), evaluate(triple.phi, y))
    rec.expect("witness_pair_values", (Fraction(7, 16), Fraction(0)), (gx, gy),
               "pair (1/4, 2): 7/16 > 0")
    return rec.report


_RUNNERS = {
    EX2_SPACE: _run_ex2_space,
    MAIN_SPACE_NEGATIVES: _run_main_space_negatives,
    MAIN_CONTRACTION: _run_main_contraction,
    MAIN_SOLVE: _run_main_solve,
    CCLASS_CATALOG: _run_cclass_catalog,
    MONOTONE_TRIPLED: _run_monotone_tripled,
}


def replicate(case: str) -> ReplicationReport:
    """Run one replication case end to end."""
    if case not in _RUNNERS:
        raise KeyError(f"unknown replication case {case!r}; "
                       f"choose from {', '.join(CASE_IDS)}")
    return _RUNNERS[case]()


def replicate_all() -> list[ReplicationReport]:
    return [replicate(case) for case in CASE_IDS]


def replication_to_dict(report: ReplicationReport) -> dict:
    return {
        "case": report.case,
        "ok": report.ok,
        "checks": [{"name": c.name, "expected": c.expected, "actual": c.actual,
                    "ok": c.ok, "source": c.source} for c in report.checks],
    }
