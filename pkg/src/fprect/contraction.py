"""Weakly contractive inequality checking over finite spaces.

For a self-map T, weight phi_w, control phi_c, altering function psi and a
two-argument combinator F, every ordered pair (x, y) is tested against

    psi(s^2 * d(Tx, Ty) + phi_w(Tx) + phi_w(Ty))  <=  F(psi(M), phi_c(M))

where M is one of three variants built from the augmented distances
aug(x, y) = d(x, y) + phi_w(x) + phi_w(y):

    m_max           max(aug(x,y), aug(x,Tx), aug(y,Ty))
    m_convex        (a*aug(x,y) + b*aug(x,Tx) + c*aug(y,Ty)) / (a+b+c)
    metric_halfsum  the plain metric-space form (s = 1) whose right side is
                    psi(m) - phi_c(l), with m the four-term maximum that
                    adds the half-sum of the cross distances and l the
                    two-term maximum

Pairs whose left side is exactly zero hold by fiat: the inequality carries
no content on a collapsed orbit and F(0, c) may be negative for admissible
combinators.

Presets package the familiar special-case bounds (scaled maximum,
half-sum, third-sum, weighted, logarithmic, ratio, difference) as
instances whose (psi, F, variant) choice makes each bound exactly the
general condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import (
    InvalidParameter,
    InvalidWeights,
    NotClosed,
    ParameterOutOfRange,
    UnknownPoint,
    VariantMismatch,
)
from .exact import (
    Value,
    is_exact,
    rational_grid,
    vadd,
    vdiv,
    vle,
    vlt,
    vmul,
    vsub,
)
from .functions import FunctionSpec, cclass, evaluate, identity, select_control
from .spaces import GeneralizedMetricSpace, Point, distance


# --- self-maps ----------------------------------------------------------------

@dataclass(frozen=True)
class MapPiece:
    """Closed-interval membership test on the point value."""

    lo: Fraction
    hi: Fraction
    target: str

    def matches(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi


@dataclass(frozen=True)
class SelfMap:
    """Total self-map given explicitly, as a constant, or piecewise.

    Exactly one of assignment/constant/pieces drives the map; pieces are
    tried in order with `otherwise` as the final catch-all.
    """

    assignment: tuple[tuple[str, str], ...] = ()
    constant: str | None = None
    pieces: tuple[MapPiece, ...] = ()
    otherwise: str | None = None

    def target_label(self, x: Point) -> str:
        if self.constant is not None:
            return self.constant
        if self.assignment:
            for src, dst in self.assignment:
                if src == x.label:
                    return dst
            raise NotClosed(f"map undefined at point {x.label!r}")
        for piece in self.pieces:
            if piece.matches(x.value):
                return piece.target
        if self.otherwise is not None:
            return self.otherwise
        raise NotClosed(f"map undefined at point {x.label!r}")


def explicit_map(assignment: dict[str, str]) -> SelfMap:
    return SelfMap(assignment=tuple(sorted(assignment.items())))


def constant_map(target: str) -> SelfMap:
    return SelfMap(constant=target)


def piecewise_map(pieces: Iterable[MapPiece], otherwise: str | None = None) -> SelfMap:
    return SelfMap(pieces=tuple(pieces), otherwise=otherwise)


def apply_map(self_map: SelfMap, x, space: GeneralizedMetricSpace) -> Point:
    """Image of x under the map; the image must itself be a space point."""
    point = space.point(x.label if isinstance(x, Point) else x)
    target = self_map.target_label(point)
    try:
        return space.point(target)
    except UnknownPoint:
        raise NotClosed(
            f"image {target!r} of point {point.label!r} is not in the space; "
            f"add it to the point set (e.g. refine the sampling grid)") from None


# --- instances -----------------------------------------------------------------

M_MAX = "m_max"
M_CONVEX = "m_convex"
METRIC_HALFSUM = "metric_halfsum"


@dataclass(frozen=True)
class Variant:
    kind: str
    a: Fraction | None = None
    b: Fraction | None = None
    c: Fraction | None = None


def m_max() -> Variant:
    return Variant(M_MAX)


def m_convex(a, b, c) -> Variant:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a < 0 or b < 0 or c < 0 or a + b + c == 0:
        raise InvalidWeights(f"need nonnegative weights with positive sum, got "
                             f"({a}, {b}, {c})")
    return Variant(M_CONVEX, a=a, b=b, c=c)


def metric_halfsum() -> Variant:
    return Variant(METRIC_HALFSUM)


@dataclass(frozen=True)
class ContractionInstance:
    """A space, self-map, function triple and coefficient to check."""

    space: GeneralizedMetricSpace
    self_map: SelfMap
    psi: FunctionSpec
    weight_phi: FunctionSpec
    control_phi: FunctionSpec
    F: FunctionSpec
    s: Fraction
    variant: Variant = field(default_factory=m_max)

    def __post_init__(self):
        if self.s < 1:
            raise InvalidParameter(f"coefficient s must be >= 1, got {self.s}")
        if self.variant.kind == METRIC_HALFSUM and self.s != 1:
            raise InvalidParameter("the metric-space variant requires s = 1")
        for p in self.space.points:  # totality and closure, checked up front
            apply_map(self.self_map, p, self.space)

    def weight(self, x: Point) -> Value:
        return evaluate(self.weight_phi, x.value)

    def image(self, x: Point) -> Point:
        return apply_map(self.self_map, x, self.space)


def _augmented(inst: ContractionInstance, x: Point, y: Point) -> Value:
    return vadd(distance(inst.space, x, y), vadd(inst.weight(x), inst.weight(y)))


def _terms(inst: ContractionInstance, x: Point, y: Point):
    tx, ty = inst.image(x), inst.image(y)
    return (_augmented(inst, x, y),
            _augmented(inst, x, tx),
            _augmented(inst, y, ty))


def _resolve(inst: ContractionInstance, x) -> Point:
    return inst.space.point(x.label if isinstance(x, Point) else str(x))


def compute_m_max(inst: ContractionInstance, x, y) -> Value:
    """Largest of the three augmented quantities for the pair."""
    x, y = _resolve(inst, x), _resolve(inst, y)
    t1, t2, t3 = _terms(inst, x, y)
    out = t1
    for t in (t2, t3):
        if vlt(out, t):
            out = t
    return out


def compute_m_convex(inst: ContractionInstance, x, y) -> Value:
    """Weighted average of the three augmented quantities."""
    var = inst.variant
    if var.kind != M_CONVEX:
        raise VariantMismatch("instance does not carry convex weights")
    x, y = _resolve(inst, x), _resolve(inst, y)
    t1, t2, t3 = _terms(inst, x, y)
    num = vadd(vmul(var.a, t1), vadd(vmul(var.b, t2), vmul(var.c, t3)))
    return vdiv(num, var.a + var.b + var.c)


def compute_m_fourterm(inst: ContractionInstance, x, y) -> Value:
    """Four-term metric-space maximum including the half-sum term."""
    if inst.variant.kind != METRIC_HALFSUM:
        raise VariantMismatch("instance is not in the metric-space variant")
    x, y = _resolve(inst, x), _resolve(inst, y)
    t1, t2, t3 = _terms(inst, x, y)
    tx, ty = inst.image(x), inst.image(y)
    cross = vadd(
        vadd(distance(inst.space, x, ty), vadd(inst.weight(x), inst.weight(ty))),
        vadd(distance(inst.space, y, tx), vadd(inst.weight(tx), inst.weight(y))))
    half = vdiv(cross, Fraction(2))
    out = t1
    for t in (t2, t3, half):
        if vlt(out, t):
            out = t
    return out


def compute_l_twoterm(inst: ContractionInstance, x, y) -> Value:
    """Two-term maximum: aug(x, y) and aug(y, Ty)."""
    if inst.variant.kind != METRIC_HALFSUM:
        raise VariantMismatch("instance is not in the metric-space variant")
    x, y = _resolve(inst, x), _resolve(inst, y)
    t1, _, t3 = _terms(inst, x, y)
    return t3 if vlt(t1, t3) else t1


# --- pair verdicts -------------------------------------------------------------

@dataclass(frozen=True)
class PairVerdict:
    """One ordered pair with both sides of the inequality and the margin."""

    x: str
    y: str
    lhs: Value
    m_value: Value
    rhs: Value
    margin: Value
    holds: bool
    l_value: Value | None = None


@dataclass
class CheckReport:
    verdicts: list[PairVerdict]
    global_holds: bool
    worst_pair: PairVerdict | None

    def verdict(self, x: str, y: str) -> PairVerdict:
        for v in self.verdicts:
            if v.x == x and v.y == y:
                return v
        raise KeyError((x, y))


def check_pair(inst: ContractionInstance, x, y,
               tolerance: Fraction = Fraction(0)) -> PairVerdict:
    """Evaluate the contraction inequality on one ordered pair."""
    x, y = _resolve(inst, x), _resolve(inst, y)
    tx, ty = inst.image(x), inst.image(y)
    lhs_arg = vadd(vmul(inst.s * inst.s, distance(inst.space, tx, ty)),
                   vadd(inst.weight(tx), inst.weight(ty)))
    lhs = evaluate(inst.psi, lhs_arg)
    l_value = None
    if inst.variant.kind == METRIC_HALFSUM:
        m_value = compute_m_fourterm(inst, x, y)
        l_value = compute_l_twoterm(inst, x, y)
        rhs = vsub(evaluate(inst.psi, m_value),
                   evaluate(inst.control_phi, l_value))
    else:
        if inst.variant.kind == M_CONVEX:
            m_value = compute_m_convex(inst, x, y)
        else:
            m_value = compute_m_max(inst, x, y)
        rhs = evaluate(inst.F,
                       evaluate(inst.psi, m_value),
                       evaluate(inst.control_phi, m_value))
    margin = vsub(rhs, lhs)
    zero_lhs = is_exact(lhs) and lhs == 0
    holds = zero_lhs or vle(vmul(Fraction(-1), tolerance), margin)
    return PairVerdict(x=x.label, y=y.label, lhs=lhs, m_value=m_value,
                       rhs=rhs, margin=margin, holds=holds, l_value=l_value)


def _variant_symmetric(variant: Variant) -> bool:
    """Whether M (and hence the margin) is invariant under swapping x, y.

    The three-term max always is; the convex form only when the two orbital
    weights agree; the metric-space form is not (its two-term l swaps)."""
    if variant.kind == M_MAX:
        return True
    if variant.kind == M_CONVEX:
        return variant.b == variant.c
    return False


def check_all(inst: ContractionInstance,
              tolerance: Fraction = Fraction(0)) -> CheckReport:
    """Verdicts for every ordered pair, including x = y.

    For variants with symmetric M, equality of the swapped margins is
    asserted as a self-check; the worst pair is the one of minimal margin
    (ties broken by scan order over sorted labels).
    """
    labels = inst.space.labels()
    verdicts: list[PairVerdict] = []
    by_pair: dict[tuple[str, str], PairVerdict] = {}
    for xl in labels:
        for yl in labels:
            v = check_pair(inst, xl, yl, tolerance)
            verdicts.append(v)
            by_pair[(xl, yl)] = v
    if _variant_symmetric(inst.variant):
        for xl in labels:
            for yl in labels:
                if xl < yl:
                    a, b = by_pair[(xl, yl)], by_pair[(yl, xl)]
                    if is_exact(a.margin) and is_exact(b.margin):
                        if a.margin != b.margin:
                            raise AssertionError(
                                f"margin asymmetry at ({xl}, {yl}): "
                                f"{a.margin} vs {b.margin}")
    worst = None
    for v in verdicts:
        if worst is None or vlt(v.margin, worst.margin):
            worst = v
    return CheckReport(verdicts=verdicts,
                       global_holds=all(v.holds for v in verdicts),
                       worst_pair=worst)


# --- special-case presets ----------------------------------------------------------

K_MAX = "k_max"
ALPHA_SUM = "alpha_sum"
LAMBDA_SUM = "lambda_sum"
WEIGHTED = "weighted"
LOG = "log"
RATIO = "ratio"
DIFFERENCE = "difference"
CONTROL_BOUND = "control_bound"

PRESET_NAMES = (K_MAX, ALPHA_SUM, LAMBDA_SUM, WEIGHTED, LOG, RATIO,
                DIFFERENCE, CONTROL_BOUND)


@dataclass(frozen=True)
class Preset:
    """Instance template: fixed (psi, F, variant) with open slots for the
    space, map, weight, control and coefficient."""

    name: str
    psi: FunctionSpec
    F: FunctionSpec
    variant: Variant
    check_side_condition: bool = False

    def build(self, space: GeneralizedMetricSpace, self_map: SelfMap,
              weight_phi: FunctionSpec,
              control_phi: FunctionSpec | None = None,
              s=Fraction(1),
              psi: FunctionSpec | None = None) -> ContractionInstance:
        control = control_phi if control_phi is not None else identity()
        shape = psi if psi is not None else self.psi
        if self.check_side_condition:
            _check_psi_dominates(shape, control)
        return ContractionInstance(
            space=space, self_map=self_map, psi=shape,
            weight_phi=weight_phi, control_phi=control,
            F=self.F, s=Fraction(s), variant=self.variant)


def _check_psi_dominates(psi: FunctionSpec, control: FunctionSpec) -> None:
    """Sampled side condition psi(t) > control(t) for t > 0."""
    for t in rational_grid(Fraction(1, 8), Fraction(10), Fraction(1, 8)):
        if not vlt(evaluate(control, t), evaluate(psi, t)):
            raise ParameterOutOfRange(
                f"side condition psi > control fails at t = {t}")


def _require_open_interval(name: str, value: Fraction, lo: Fraction,
                           hi: Fraction) -> Fraction:
    value = Fraction(value)
    if not lo < value < hi:
        raise ParameterOutOfRange(
            f"{name} must lie strictly between {lo} and {hi}, got {value}")
    return value


def make_preset(name: str, **params) -> Preset:
    """Template whose inequality is exactly the general condition.

    k_max       F = k*s over the three-term max, k in (0, 1)
    alpha_sum   bound alpha*(aug(x,Tx) + aug(y,Ty)): k = 2*alpha over the
                (0,1,1) convex average, alpha in (0, 1/2)
    lambda_sum  bound lambda*(sum of all three): k = 3*lambda over the
                (1,1,1) convex average, lambda in (0, 1/3)
    weighted    bound k*(b1*aug(x,y) + b2*aug(x,Tx) + b3*aug(y,Ty)) with
                nonnegative bi summing to at most 1: k*(b1+b2+b3) over the
                (b1,b2,b3) convex average
    log            F(s,t) = s * (log base t+a of a), a > 1
    ratio          F(s,t) = s / (1 + t)
    difference     F(s,t) = s - t
    control_bound  right side is the control value at M; requires the
                   sampled side condition psi > control on positives
    """
    if name == K_MAX:
        k = _require_open_interval("k", params.pop("k"), Fraction(0), Fraction(1))
        return Preset(K_MAX, identity(), cclass(2, m=k), m_max())
    if name == ALPHA_SUM:
        alpha = _require_open_interval("alpha", params.pop("alpha"),
                                       Fraction(0), Fraction(1, 2))
        return Preset(ALPHA_SUM, identity(), cclass(2, m=2 * alpha),
                      m_convex(0, 1, 1))
    if name == LAMBDA_SUM:
        lam = _require_open_interval("lambda", params.pop("lambda_"),
                                     Fraction(0), Fraction(1, 3))
        return Preset(LAMBDA_SUM, identity(), cclass(2, m=3 * lam),
                      m_convex(1, 1, 1))
    if name == WEIGHTED:
        k = _require_open_interval("k", params.pop("k"), Fraction(0), Fraction(1))
        betas = tuple(Fraction(params.pop(b)) for b in ("beta1", "beta2", "beta3"))
        if any(b < 0 for b in betas):
            raise ParameterOutOfRange(f"weights must be nonnegative, got {betas}")
        total = sum(betas)
        if not 0 < total <= 1:
            raise ParameterOutOfRange(
                f"weights must have positive sum at most 1, got sum {total}")
        return Preset(WEIGHTED, identity(), cclass(2, m=k * total),
                      m_convex(*betas))
    if name == LOG:
        a = Fraction(params.pop("a"))
        if a <= 1:
            raise ParameterOutOfRange(f"log preset needs a > 1, got {a}")
        return Preset(LOG, identity(), cclass(7, a=a), m_max())
    if name == RATIO:
        return Preset(RATIO, identity(), cclass(3, r=1), m_max())
    if name == DIFFERENCE:
        return Preset(DIFFERENCE, identity(), cclass(1), m_max())
    if name == CONTROL_BOUND:
        return Preset(CONTROL_BOUND, identity(), select_control(), m_max(),
                      check_side_condition=True)
    raise ParameterOutOfRange(f"unknown preset {name!r}")
