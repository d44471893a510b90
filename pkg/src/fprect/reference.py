"""Bundled reference spaces, maps and function triples.

Two families ship with the toolkit and drive the replication cases, the
demos and the test suite:

* the six-point family: reciprocals 1/2 ... 1/7 with a hand-picked
  distance table, extended by a sampled copy of [1, 2]; b-rectangular with
  coefficient 3 but neither metric, b-metric (s = 3) nor rectangular;

* the four-point family: {0, 1/5, 1/9, 1/16} with its own table, extended
  by a sampled copy of [1/2, 1]; again b-rectangular with coefficient 3,
  and carrying a self-map (everything in the interval to 1/16, the four
  rationals to 0) that satisfies the weakly contractive condition with
  psi = 3t/2, a kinked weight, control t/16 (t/8 above 1) and the
  difference combinator.  Its unique fixed point is 0.

All table values are exact; interval parts are represented by rational
sampling grids whose step is a parameter.
"""

from __future__ import annotations

from fractions import Fraction

from .contraction import ContractionInstance, MapPiece, SelfMap, m_max, piecewise_map
from .functions import FunctionSpec, Piece, TripledSpec, cclass, linear, sqrt_spec
from .spaces import (
    FallbackRule,
    GeneralizedMetricSpace,
    Point,
    build_space,
    sample_interval,
)

MAIN_DEFAULT_STEP = Fraction(1, 32)
EX2_DEFAULT_STEP = Fraction(1, 8)


def _f(x) -> Fraction:
    return Fraction(x)


def four_point_core() -> list[tuple[str, str, Fraction]]:
    """Distance table of the four-point family (all six pairs)."""
    return [
        ("0", "1/9", _f("1/10")),
        ("1/5", "1/16", _f("1/10")),
        ("0", "1/5", _f("1/2")),
        ("1/5", "1/9", _f("1/2")),
        ("0", "1/16", _f("1/20")),
        ("1/9", "1/16", _f("1/20")),
    ]


def main_space(step: Fraction = MAIN_DEFAULT_STEP) -> GeneralizedMetricSpace:
    """Four rationals plus a sampled [1/2, 1]; squared-difference fallback."""
    points = [Point("0", _f(0)), Point("1/5", _f("1/5")),
              Point("1/9", _f("1/9")), Point("1/16", _f("1/16"))]
    points += sample_interval(_f("1/2"), _f(1), step)
    return build_space(points, four_point_core(),
                       FallbackRule.SQUARED_DIFFERENCE, claimed_s=_f(3))


def main_space_core_only() -> GeneralizedMetricSpace:
    """The four rationals alone (no interval part)."""
    points = [Point("0", _f(0)), Point("1/5", _f("1/5")),
              Point("1/9", _f("1/9")), Point("1/16", _f("1/16"))]
    return build_space(points, four_point_core(),
                       FallbackRule.SQUARED_DIFFERENCE, claimed_s=_f(3))


def ex2_space(step: Fraction = EX2_DEFAULT_STEP) -> GeneralizedMetricSpace:
    """Six reciprocals plus a sampled [1, 2]; squared-difference fallback."""
    recips = {n: f"1/{n}" for n in range(2, 8)}
    points = [Point(recips[n], Fraction(1, n)) for n in range(2, 8)]
    points += sample_interval(_f(1), _f(2), step)
    rows = [
        (_f("0.05"), [(2, 3), (4, 5), (6, 7)]),
        (_f("0.08"), [(2, 4), (3, 7), (5, 6)]),
        (_f("0.4"), [(2, 6), (3, 4), (5, 7)]),
        (_f("0.24"), [(2, 5), (3, 6), (4, 7)]),
        (_f("0.15"), [(2, 7), (3, 5), (4, 6)]),
    ]
    entries = [(recips[a], recips[b], value)
               for value, pairs in rows for a, b in pairs]
    return build_space(points, entries, FallbackRule.SQUARED_DIFFERENCE,
                       claimed_s=_f(3))


def main_map() -> SelfMap:
    """Everything in [1/2, 1] to 1/16; the four rationals to 0."""
    return piecewise_map(
        pieces=[MapPiece(_f("1/2"), _f(1), "1/16")],
        otherwise="0")


def main_psi() -> FunctionSpec:
    return linear(_f("3/2"))


def main_weight() -> FunctionSpec:
    """t on [0, 1] (closed), 2t above."""
    return FunctionSpec("piecewise", pieces=(
        Piece(_f(0), _f(1), (_f(0), _f(1)), closed_hi=True),
        Piece(_f(1), None, (_f(0), _f(2))),
    ))


def main_control() -> FunctionSpec:
    """t/16 on [0, 1] (closed), t/8 above."""
    return FunctionSpec("piecewise", pieces=(
        Piece(_f(0), _f(1), (_f(0), _f("1/16")), closed_hi=True),
        Piece(_f(1), None, (_f(0), _f("1/8"))),
    ))


def main_instance(step: Fraction = MAIN_DEFAULT_STEP) -> ContractionInstance:
    return ContractionInstance(
        space=main_space(step),
        self_map=main_map(),
        psi=main_psi(),
        weight_phi=main_weight(),
        control_phi=main_control(),
        F=cclass(1),
        s=_f(3),
        variant=m_max(),
    )


def kinked_root_psi() -> FunctionSpec:
    """sqrt(t) on [0, 1] (closed), t^2 above."""
    return FunctionSpec("piecewise", pieces=(
        Piece(_f(0), _f(1), use_sqrt=True, closed_hi=True),
        Piece(_f(1), None, (_f(0), _f(0), _f(1))),
    ))


def monotone_triple() -> TripledSpec:
    """Known-monotone triple: composite value is 0 on [0,1], rising above."""
    return TripledSpec(psi=kinked_root_psi(), phi=sqrt_spec(), F=cclass(1))


def non_monotone_triple() -> TripledSpec:
    """Known non-monotone triple: square weight beats the root inside [0,1]."""
    return TripledSpec(
        psi=kinked_root_psi(),
        phi=FunctionSpec("piecewise",
                         pieces=(Piece(_f(0), None, (_f(0), _f(0), _f(1))),)),
        F=cclass(1))


def catalog_compliant_specs() -> list[FunctionSpec]:
    """All sixteen combinators with documented compliant parameters."""
    return [
        cclass(1),
        cclass(2, m=_f("1/2")),
        cclass(3, r=1),
        cclass(4, a=2),
        cclass(5, a=_f("2719/1000")),
        cclass(6, l=2, r=1),
        cclass(7, a=2),
        cclass(8),
        cclass(9),
        cclass(10, k=1),
        cclass(11),
        cclass(12),
        cclass(13),
        cclass(14, n=2),
        cclass(15),
        cclass(16, r=1),
    ]
