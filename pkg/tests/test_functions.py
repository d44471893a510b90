"""Function catalog evaluation and property-verifier tests.

Frozen expected values were derived by direct substitution into the
catalog formulas; the monotone check is cross-checked against an
independent grid-search oracle.
"""

from fractions import Fraction as F

import pytest

from fprect import (
    ArityMismatch,
    DomainError,
    FunctionSpec,
    InvalidFunctionParams,
    Piece,
    cclass,
    check_monotone_tripled,
    evaluate,
    linear,
    poly_spec,
    ratio_spec,
    rational_grid,
    sqrt_spec,
    verify_altering,
    verify_cclass,
    verify_lsc,
    verify_phi_u,
    verify_usc,
)
from fprect import reference
from fprect.exact import is_exact, to_mpf
from fprect.functions import is_exact_spec, select_control

SMALL_GRID = rational_grid(F(0), F(4), F(1, 4))


# --- evaluation ---------------------------------------------------------------

def test_difference_combinator():
    assert evaluate(cclass(1), F(5), F(2)) == F(3)


def test_linear_psi_at_eighth():
    assert evaluate(linear(F(3, 2)), F(1, 8)) == F(3, 16)


def test_entry16_direct_value():
    # s/(1+s)^r at (1, 9) with r = 1: 1/(1+1) = 1/2; t is ignored
    assert evaluate(cclass(16, r=1), F(1), F(9)) == F(1, 2)


def test_exact_entries_return_fractions():
    for spec in (cclass(1), cclass(2, m=F(1, 2)), cclass(3, r=2), cclass(8),
                 cclass(9), cclass(10, k=1), cclass(11), cclass(12),
                 cclass(13), cclass(15), cclass(16, r=1)):
        assert is_exact_spec(spec)
        assert is_exact(evaluate(spec, F(3, 7), F(2, 5)))


def test_transcendental_entries_use_mpf():
    for spec in (cclass(4, a=2), cclass(5, a=F(2719, 1000)),
                 cclass(6, l=2, r=1), cclass(7, a=2), cclass(14, n=2)):
        assert not is_exact_spec(spec)
        out = evaluate(spec, F(3, 7), F(2, 5))
        assert not is_exact(out)


def test_evaluation_deterministic():
    spec = cclass(4, a=2)
    assert evaluate(spec, F(3), F(1)) == evaluate(spec, F(3), F(1))
    exact = cclass(13)
    assert evaluate(exact, F(3), F(1)) == evaluate(exact, F(3), F(1))


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        evaluate(cclass(1), F(1))
    with pytest.raises(ArityMismatch):
        evaluate(linear(F(2)), F(1), F(2))


def test_ratio_denominator_domain_error():
    spec = ratio_spec(["1"], ["-1", "1"])  # 1/(t - 1)
    with pytest.raises(DomainError):
        evaluate(spec, F(1))


def test_piecewise_uncovered_argument():
    spec = FunctionSpec("piecewise", pieces=(Piece(F(1), F(2), (F(0), F(1))),))
    with pytest.raises(DomainError):
        evaluate(spec, F(0))


def test_sqrt_exact_on_perfect_squares():
    assert evaluate(sqrt_spec(), F(1, 4)) == F(1, 2)
    assert is_exact(evaluate(sqrt_spec(), F(9, 16)))
    assert not is_exact(evaluate(sqrt_spec(), F(2)))


def test_param_constraints_enforced():
    with pytest.raises(InvalidFunctionParams):
        cclass(2, m=F(3, 2))
    with pytest.raises(InvalidFunctionParams):
        cclass(3, r=0)
    with pytest.raises(InvalidFunctionParams):
        cclass(4, a=1)
    with pytest.raises(InvalidFunctionParams):
        cclass(5, a=F(27, 10))  # below the rational stand-in for e
    with pytest.raises(InvalidFunctionParams):
        cclass(6, l=1, r=1)
    with pytest.raises(InvalidFunctionParams):
        cclass(10, k=0)
    with pytest.raises(InvalidFunctionParams):
        cclass(14, n=F(1, 2))


def test_piecewise_closed_boundary():
    weight = reference.main_weight()
    assert evaluate(weight, F(1)) == F(1)          # closed at 1
    assert evaluate(weight, F(33, 32)) == F(33, 16)  # doubled above
    control = reference.main_control()
    assert evaluate(control, F(1)) == F(1, 16)
    assert evaluate(control, F(2)) == F(1, 4)


def test_inner_override():
    # entry 9 with a constant beta = 1/2 reduces to halving
    beta = poly_spec([F(1, 2)])
    spec = cclass(9, inner=beta)
    assert evaluate(spec, F(3), F(0)) == F(3, 2)


# --- altering distance --------------------------------------------------------

def test_altering_identity_passes():
    assert verify_altering(linear(1), SMALL_GRID).verdict


def test_altering_square_passes():
    assert verify_altering(poly_spec([0, 0, 1]), SMALL_GRID).verdict


def test_altering_one_minus_t_fails():
    spec = poly_spec([1, -1])
    report = verify_altering(spec, [F(0), F(1, 2), F(1)])
    assert not report.verdict
    reasons = {w.reason for w in report.witnesses}
    assert any("zero" in r for r in reasons)
    assert any("decrease" in r for r in reasons)


def test_altering_notes_continuity_provenance():
    assert "PROVEN-BY-CATALOG" in verify_altering(linear(2), SMALL_GRID).notes[0]
    user = poly_spec([0, 1])
    assert "SAMPLED" in verify_altering(user, SMALL_GRID).notes[0]


# --- positive weight class ------------------------------------------------------

def test_phi_u_examples():
    assert verify_phi_u(linear(F(1, 16)), SMALL_GRID).verdict
    assert verify_phi_u(poly_spec([0, 0, 1]), SMALL_GRID).verdict
    zero = poly_spec([0])
    report = verify_phi_u(zero, SMALL_GRID)
    assert not report.verdict


# --- combinator axioms -----------------------------------------------------------

def test_catalog_passes_on_small_grid():
    for spec in reference.catalog_compliant_specs():
        report = verify_cclass(spec, SMALL_GRID)
        assert report.verdict, (spec.catalog, report.witnesses[:2])


def test_equality_loci_on_small_grid():
    diff = verify_cclass(cclass(1), SMALL_GRID)
    assert diff.equality_samples == [(s, F(0)) for s in SMALL_GRID]
    scaled = verify_cclass(cclass(2, m=F(1, 2)), SMALL_GRID)
    assert scaled.equality_samples == [(F(0), t) for t in SMALL_GRID]


def test_constructed_violation_fails():
    # F(s, t) = t exceeds s whenever t > s and sits on the equality locus
    # at positive s = t, so both axioms break
    report = verify_cclass(select_control(), SMALL_GRID, witness_cap=None)
    assert not report.verdict
    reasons = {w.reason for w in report.witnesses}
    assert any("axiom 1" in r for r in reasons)
    assert any("axiom 2" in r for r in reasons)


def test_cclass_witness_cap():
    capped = verify_cclass(select_control(), SMALL_GRID, witness_cap=3)
    assert len(capped.witnesses) == 3
    assert not capped.verdict


# --- semicontinuity ---------------------------------------------------------------

def test_lsc_kinked_weight_passes_at_the_kink():
    grid = rational_grid(F(0), F(2), F(1, 16))
    report = verify_lsc(reference.main_weight(), grid)
    assert ("1/1",) not in [w.args for w in report.witnesses]
    assert any("APPROXIMATE" in n for n in report.notes)


def test_lsc_step_function_fails_near_jump():
    grid = rational_grid(F(0), F(2), F(1, 16))
    step = FunctionSpec("piecewise", pieces=(
        Piece(F(0), F(1), (F(0),)), Piece(F(1), None, (F(5),))))
    report = verify_lsc(step, grid)
    assert not report.verdict
    assert ("1/1",) in [w.args for w in report.witnesses]


def test_lsc_continuous_formula_passes():
    grid = rational_grid(F(0), F(2), F(1, 16))
    assert verify_lsc(poly_spec([0, 0, 1]), grid).verdict


def test_usc_mirror():
    grid = rational_grid(F(0), F(2), F(1, 16))
    assert verify_usc(poly_spec([0, 1]), grid).verdict
    drop = FunctionSpec("piecewise", pieces=(
        Piece(F(0), F(1), (F(5),)), Piece(F(1), None, (F(0),))))
    report = verify_usc(drop, grid)
    assert not report.verdict


# --- monotone triple ---------------------------------------------------------------

def _composite(triple, x):
    return evaluate(triple.F, evaluate(triple.psi, x), evaluate(triple.phi, x))


def oracle_monotone(triple, grid, tol):
    """Independent all-pairs scan."""
    vals = [_composite(triple, x) for x in grid]
    for i in range(len(grid)):
        for j in range(i + 1, len(grid)):
            if to_mpf(vals[i]) > to_mpf(vals[j]) + to_mpf(tol):
                return False
    return True


def test_monotone_triple_passes():
    report = check_monotone_tripled(reference.monotone_triple())
    assert report.verdict


def test_non_monotone_triple_fails():
    report = check_monotone_tripled(reference.non_monotone_triple())
    assert not report.verdict
    assert report.witnesses


def test_non_monotone_witness_values():
    triple = reference.non_monotone_triple()
    # sqrt weight at 1/4 is exact: 1/2 - 1/16 = 7/16; above 1 both parts
    # square so the composite collapses to 0
    assert _composite(triple, F(1, 4)) == F(7, 16)
    assert _composite(triple, F(2)) == F(0)


def test_monotone_matches_oracle():
    grid = rational_grid(F(0), F(4), F(1, 8))
    tol = F(1, 10 ** 20)
    for triple in (reference.monotone_triple(), reference.non_monotone_triple()):
        report = check_monotone_tripled(triple, grid, tolerance=tol)
        assert report.verdict == oracle_monotone(triple, grid, tol)


def test_monotone_examines_every_pair():
    grid = rational_grid(F(0), F(4), F(1, 16))
    report = check_monotone_tripled(reference.monotone_triple(), grid)
    n = len(grid)
    assert f"{n * (n - 1) // 2} pairs" in report.grid
