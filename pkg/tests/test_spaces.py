"""Space construction, distance resolution, and axiom checker tests.

Expected values for the scans were computed with the independent
brute-force oracles at the bottom of this file (plain itertools over
Fractions) and frozen; the oracles also run directly against the library
on small spaces.
"""

from fractions import Fraction as F
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fprect import (
    AsymmetricEntry,
    DistanceTable,
    DuplicateLabel,
    FallbackRule,
    GeneralizedMetricSpace,
    InvalidEntry,
    InvalidParameter,
    InvalidRange,
    NegativeDistance,
    NoFiniteCoefficient,
    Point,
    SpaceProfile,
    TooFewPoints,
    UnknownPoint,
    UnresolvablePair,
    build_space,
    check_b_rectangular,
    check_b_triangle,
    check_rectangular,
    check_triangle,
    distance,
    generate_random_space,
    minimal_b_rect_s,
    sample_interval,
)
from fprect import reference


# --- independent oracles -----------------------------------------------------

def oracle_triangle(space, s=F(1)):
    """Exhaustive three-point scan, coded independently of the library."""
    labs = space.labels()
    bad = []
    for x, y in combinations(labs, 2):
        for u in labs:
            if u in (x, y):
                continue
            if distance(space, x, y) > s * (distance(space, x, u)
                                            + distance(space, u, y)):
                bad.append((x, u, y))
    return bad


def oracle_rectangular(space, s=F(1)):
    """Exhaustive four-point scan over distinct quadruples."""
    labs = space.labels()
    bad = []
    for x, y in combinations(labs, 2):
        rest = [u for u in labs if u not in (x, y)]
        for u, v in permutations(rest, 2):
            path = (distance(space, x, u) + distance(space, u, v)
                    + distance(space, v, y))
            if distance(space, x, y) > s * path:
                bad.append((x, u, v, y))
    return bad


def oracle_minimal_s(space):
    """Max ratio over all quadruples of four distinct points."""
    labs = space.labels()
    best = F(0)
    for x, y, u, v in permutations(labs, 4):
        ratio = distance(space, x, y) / (distance(space, x, u)
                                         + distance(space, u, v)
                                         + distance(space, v, y))
        best = max(best, ratio)
    return best


def unit_space(n):
    """n points, every distance exactly 1."""
    points = [Point(f"q{i}", F(i)) for i in range(n)]
    entries = [(a.label, b.label, F(1)) for a, b in combinations(points, 2)]
    return build_space(points, entries)


# --- construction -------------------------------------------------------------

def test_build_reference_spaces():
    assert len(reference.ex2_space()) == 6 + 9
    assert len(reference.main_space()) == 4 + 17
    assert reference.ex2_space().claimed_s == 3


def test_single_point_space():
    space = build_space([Point("p", F(1))])
    assert distance(space, "p", "p") == 0


def test_negative_distance_rejected():
    with pytest.raises(NegativeDistance):
        build_space([Point("a", F(0)), Point("b", F(1))], [("a", "b", F(-1))])


def test_duplicate_label_rejected():
    with pytest.raises(DuplicateLabel):
        build_space([Point("a", F(0)), Point("a", F(1))])


def test_conflicting_orders_rejected():
    with pytest.raises(AsymmetricEntry):
        build_space([Point("a", F(0)), Point("b", F(1))],
                    [("a", "b", F(1)), ("b", "a", F(2))])


def test_duplicate_consistent_entry_allowed():
    space = build_space([Point("a", F(0)), Point("b", F(1))],
                        [("a", "b", F(1)), ("b", "a", F(1))])
    assert distance(space, "b", "a") == 1


def test_self_pair_nonzero_rejected():
    with pytest.raises(InvalidEntry):
        build_space([Point("a", F(0))], [("a", "a", F(1))])


def test_zero_between_distinct_rejected():
    with pytest.raises(InvalidEntry):
        build_space([Point("a", F(0)), Point("b", F(1))], [("a", "b", F(0))])


def test_unresolvable_pair_without_fallback():
    with pytest.raises(UnresolvablePair):
        build_space([Point("a", F(0)), Point("b", F(1))])


def test_fallback_zero_for_distinct_points_rejected():
    # distinct labels with equal values would get fallback distance zero
    with pytest.raises(InvalidEntry):
        build_space([Point("a", F(1)), Point("b", F(1))],
                    fallback=FallbackRule.SQUARED_DIFFERENCE)


def test_entry_for_unknown_point_rejected():
    with pytest.raises(UnknownPoint):
        build_space([Point("a", F(0))], [("a", "zz", F(1))])


# --- distance ------------------------------------------------------------------

def test_distance_table_and_symmetry():
    space = reference.main_space()
    assert distance(space, "1/5", "1/9") == F(1, 2)
    assert distance(space, "1/9", "1/5") == F(1, 2)


def test_distance_self_zero():
    assert distance(reference.main_space(), "1/2", "1/2") == 0


def test_distance_fallback_squared_difference():
    # oracle: direct evaluation of the fallback formula
    expected = (F(3, 4) - F(1, 2)) ** 2
    assert expected == F(1, 16)
    assert distance(reference.main_space(), "3/4", "1/2") == expected


def test_distance_unknown_point():
    with pytest.raises(UnknownPoint):
        distance(reference.main_space(), "0", "nope")


def test_distance_total_on_reference_spaces():
    for space in (reference.main_space(), reference.ex2_space()):
        for a, b in combinations(space.labels(), 2):
            assert distance(space, a, b) == distance(space, b, a) > 0


# --- triangle checks -------------------------------------------------------------

def test_triangle_fails_on_main_space():
    report = check_triangle(reference.main_space(), witness_cap=None)
    assert not report.verdict
    hits = [w for w in report.witnesses if w.labels == ("1/5", "1/16", "1/9")]
    assert hits and hits[0].lhs == F(1, 2) and hits[0].rhs == F(3, 20)


def test_triangle_vacuous_on_two_points():
    space = build_space([Point("a", F(0)), Point("b", F(1))], [("a", "b", F(5))])
    assert check_triangle(space).verdict


def test_triangle_matches_oracle_on_core():
    space = reference.main_space_core_only()
    report = check_triangle(space, witness_cap=None)
    assert report.total_violations == len(oracle_triangle(space))


def test_b_triangle_s3_fails_on_main_space():
    report = check_b_triangle(reference.main_space(), F(3), witness_cap=None)
    assert not report.verdict
    hits = [w for w in report.witnesses if w.labels == ("1/5", "1/16", "1/9")]
    assert hits and hits[0].lhs == F(1, 2) and hits[0].rhs == F(9, 20)


def test_b_triangle_s1_reduces_to_triangle():
    for space in (reference.main_space_core_only(), generate_random_space(5, 11)):
        tri = check_triangle(space, witness_cap=None)
        btr = check_b_triangle(space, F(1), witness_cap=None)
        assert tri.verdict == btr.verdict
        assert [w.labels for w in tri.witnesses] == [w.labels for w in btr.witnesses]


def test_b_triangle_specific_triple_passes_at_ten_thirds():
    # 1/2 <= (10/3) * (1/10 + 1/20) = 1/2 exactly
    assert F(1, 2) <= F(10, 3) * (F(1, 10) + F(1, 20))
    report = check_b_triangle(reference.main_space_core_only(), F(10, 3),
                              witness_cap=None)
    assert ("1/5", "1/16", "1/9") not in [w.labels for w in report.witnesses]


def test_b_triangle_rejects_nonpositive_s():
    with pytest.raises(InvalidParameter):
        check_b_triangle(reference.main_space_core_only(), F(0))


# --- rectangular checks -----------------------------------------------------------

def test_rectangular_fails_on_main_space():
    report = check_rectangular(reference.main_space(), witness_cap=None)
    assert not report.verdict
    hits = [w for w in report.witnesses
            if w.labels == ("1/5", "1/16", "0", "1/9")]
    assert hits and hits[0].lhs == F(1, 2) and hits[0].rhs == F(1, 4)


def test_rectangular_vacuous_on_three_points():
    points = [Point(c, F(i)) for i, c in enumerate("abc")]
    entries = [("a", "b", F(9)), ("a", "c", F(9)), ("b", "c", F(9))]
    assert check_rectangular(build_space(points, entries)).verdict


def test_rectangular_passes_on_unit_distances():
    assert check_rectangular(unit_space(5)).verdict


def test_b_rectangular_reference_spaces_at_three():
    assert check_b_rectangular(reference.ex2_space(), F(3)).verdict
    assert check_b_rectangular(reference.main_space(), F(3)).verdict


def test_b_rectangular_s1_matches_rectangular_oracle():
    space = reference.main_space_core_only()
    report = check_b_rectangular(space, F(1), witness_cap=None)
    assert not report.verdict
    assert report.total_violations == len(oracle_rectangular(space))
    plain = check_rectangular(space, witness_cap=None)
    assert [w.labels for w in report.witnesses] == [w.labels for w in plain.witnesses]


# --- minimal coefficient ------------------------------------------------------------

def test_minimal_s_on_core_is_two():
    space = reference.main_space_core_only()
    assert oracle_minimal_s(space) == F(2)
    assert minimal_b_rect_s(space) == F(2)


def test_minimal_s_unit_space():
    assert minimal_b_rect_s(unit_space(4)) == F(1, 3)


def test_minimal_s_requires_four_points():
    with pytest.raises(TooFewPoints):
        minimal_b_rect_s(unit_space(3))


def test_minimal_s_zero_path_guard():
    # crafted table bypassing build_space validation: a zero-length path
    # against positive separation has no finite coefficient
    points = tuple(Point(f"p{i}", F(i)) for i in range(4))
    entries = {
        DistanceTable.key("p0", "p1"): F(1),
        DistanceTable.key("p0", "p2"): F(0),
        DistanceTable.key("p2", "p3"): F(0),
        DistanceTable.key("p3", "p1"): F(0),
        DistanceTable.key("p0", "p3"): F(1),
        DistanceTable.key("p1", "p2"): F(1),
    }
    space = GeneralizedMetricSpace(points, DistanceTable(entries))
    with pytest.raises(NoFiniteCoefficient):
        minimal_b_rect_s(space)


@pytest.mark.parametrize("seed", range(8))
def test_minimal_s_is_tight(seed):
    space = generate_random_space(5 + seed % 3, seed)
    s_star = minimal_b_rect_s(space)
    assert s_star == oracle_minimal_s(space)
    assert check_b_rectangular(space, s_star).verdict
    for k in (1, 4, 20):
        shrunk = s_star * (1 - F(1, 2 ** k))
        if shrunk > 0:
            assert not check_b_rectangular(space, shrunk).verdict


# --- sampling and random spaces -------------------------------------------------------

def test_sample_interval_quarters():
    pts = sample_interval(F(1, 2), F(1), F(1, 4))
    assert [p.value for p in pts] == [F(1, 2), F(3, 4), F(1)]
    assert [p.label for p in pts] == ["1/2", "3/4", "1"]


def test_sample_interval_degenerate():
    pts = sample_interval(F(1), F(1), F(7))
    assert [p.value for p in pts] == [F(1)]


def test_sample_interval_count():
    step = F(1, 32)
    pts = sample_interval(F(1, 2), F(1), step)
    assert len(pts) == (F(1) - F(1, 2)) / step + 1 == 17


def test_sample_interval_hi_always_included():
    pts = sample_interval(F(0), F(1), F(3, 8))
    assert pts[-1].value == F(1)
    assert [p.value for p in pts] == [F(0), F(3, 8), F(3, 4), F(1)]


def test_sample_interval_invalid():
    with pytest.raises(InvalidRange):
        sample_interval(F(1), F(0), F(1, 2))
    with pytest.raises(InvalidRange):
        sample_interval(F(0), F(1), F(0))


def test_generate_random_space_deterministic():
    a = generate_random_space(4, 7)
    b = generate_random_space(4, 7)
    assert a.points == b.points
    assert a.table.entries == b.table.entries


def test_generate_random_space_single_point():
    space = generate_random_space(1, 3)
    assert len(space) == 1


@pytest.mark.parametrize("seed", range(6))
def test_metric_profile_satisfies_triangle(seed):
    space = generate_random_space(6, seed, SpaceProfile.METRIC)
    assert check_triangle(space).verdict
    assert not oracle_triangle(space)


def test_generic_profile_distances_positive():
    space = generate_random_space(7, 123)
    for a, b in combinations(space.labels(), 2):
        assert distance(space, a, b) > 0


# --- hierarchy and determinism invariants ----------------------------------------------

@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(4, 6),
       s_num=st.integers(1, 8))
def test_hierarchy_implications(seed, n, s_num):
    s = F(s_num, 2)
    if s < 1:
        s += 1
    space = generate_random_space(n, seed)
    if check_triangle(space).verdict:
        assert check_b_triangle(space, s).verdict
    if check_rectangular(space).verdict:
        assert check_b_rectangular(space, s).verdict
    # monotonicity in s
    if check_b_rectangular(space, s).verdict:
        assert check_b_rectangular(space, s + 1).verdict


def test_metric_space_triangle_implies_b_triangle():
    space = generate_random_space(6, 42, SpaceProfile.METRIC)
    assert check_triangle(space).verdict
    for s in (F(1), F(3, 2), F(3)):
        assert check_b_triangle(space, s).verdict


def test_reports_reproducible_bit_exactly():
    space = reference.main_space()
    first = check_rectangular(space, witness_cap=None)
    second = check_rectangular(space, witness_cap=None)
    assert first.witnesses == second.witnesses
    assert first.total_violations == second.total_violations


def test_witness_cap():
    space = reference.main_space()
    capped = check_triangle(space, witness_cap=2)
    full = check_triangle(space, witness_cap=None)
    assert len(capped.witnesses) == 2
    assert capped.total_violations == full.total_violations
    assert capped.witnesses == full.witnesses[:2]


def test_verdict_iff_no_witnesses():
    for space in (reference.main_space_core_only(), unit_space(5)):
        for report in (check_triangle(space), check_rectangular(space),
                       check_b_rectangular(space, F(3))):
            assert report.verdict == (not report.witnesses)
