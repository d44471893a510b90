"""Catalogs of altering-distance, weight/control, and C-class functions,
with sampled verification of their defining axioms.

A FunctionSpec names either a one-argument scalar function (psi, weight phi,
control phi) or a two-argument C-class combinator F.  Catalog ids:

  one argument:
    identity              t
    linear                c*t                       (param c)
    piecewise             ordered polynomial/sqrt pieces
    ratio                 p(t)/q(t) for polynomials p, q
    sqrt                  square root of t

  two arguments (C-class combinators, F(s, t)):
    cclass_1   s - t
    cclass_2   m*s, 0 < m < 1
    cclass_3   s / (1+t)^r, r > 0
    cclass_4   log base a of (t + a^s)/(1 + t), a > 1
    cclass_5   ln((1 + a^s)/2), a >= 2719/1000
    cclass_6   (s + l)^(1/(1+t)^r) - l, l > 1, r > 0
    cclass_7   s * (log base t+a of a), a > 1
    cclass_8   s - ((1+s)/(2+s)) * (t/(1+t))
    cclass_9   s * beta(s) with continuous beta into (0, 1)
    cclass_10  s - t/(k+t), k > 0
    cclass_11  s - g(s) with continuous g, g(t) = 0 iff t = 0
    cclass_12  s * h(t) with continuous h < 1 on positives
    cclass_13  s - ((2+t)/(1+t)) * t
    cclass_14  n-th root of ln(1 + s^n), integer n >= 1
    cclass_15  u(s) with upper semicontinuous u, u(0) = 0, u(t) < t for t > 0
    cclass_16  s / (1+s)^r, r > 0
    select_control  t  (plumbing for presets whose bound is the control value;
                        not itself a C-class function)

Entries 9, 11, 12 and 15 accept an optional one-argument `inner` spec for
beta/g/h/u; when omitted, rational defaults are used (1/(2+s), s/(1+s),
t/(1+t) and s^2/(1+s) respectively) so those entries stay exact.

Rational entries evaluate exactly as Fractions; the transcendental ones
(4, 5, 6, 7, 14, and 3/16 with non-integer exponent) evaluate with mpmath
at the configured precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from mpmath import mp

from .errors import ArityMismatch, DomainError, InvalidFunctionParams
from .exact import (
    Value,
    is_exact,
    rational_grid,
    to_mpf,
    value_sqrt,
    vabs,
    vadd,
    vdiv,
    vle,
    vlt,
    vmul,
    vsub,
    workprec,
)

MIN_A_ABOVE_E = Fraction(2719, 1000)  # rational stand-in for the a > e bound

DEFAULT_GRID_LO = Fraction(0)
DEFAULT_GRID_HI = Fraction(10)
DEFAULT_GRID_STEP_1D = Fraction(1, 8)
DEFAULT_GRID_STEP_2D = Fraction(1, 8)

EXACT_TOLERANCE = Fraction(1, 10**30)
APPROX_TOLERANCE = Fraction(1, 10**20)

_CCLASS_IDS = {f"cclass_{i}" for i in range(1, 17)}
_TWO_ARG_IDS = _CCLASS_IDS | {"select_control"}
_ONE_ARG_IDS = {"identity", "linear", "piecewise", "ratio", "sqrt"}
_INNER_IDS = {"cclass_9", "cclass_11", "cclass_12", "cclass_15"}
_TRANSCENDENTAL_IDS = {"cclass_4", "cclass_5", "cclass_6", "cclass_7", "cclass_14"}


@dataclass(frozen=True)
class Piece:
    """One polynomial (or sqrt) branch of a piecewise function.

    Covers [lo, hi), or [lo, hi] when closed_hi is set; hi=None means
    unbounded above.  Pieces are matched in order, first hit wins.
    """

    lo: Fraction
    hi: Fraction | None
    coeffs: tuple[Fraction, ...] = ()
    use_sqrt: bool = False
    closed_hi: bool = False

    def matches(self, t: Value) -> bool:
        if vlt(t, self.lo):
            return False
        if self.hi is None:
            return True
        if vlt(t, self.hi):
            return True
        return self.closed_hi and vle(self.hi, t) and vle(t, self.hi)


@dataclass(frozen=True)
class FunctionSpec:
    """Parameterized catalog entry; see the module docstring for ids."""

    catalog: str
    params: tuple[tuple[str, Fraction], ...] = ()
    inner: "FunctionSpec | None" = None
    pieces: tuple[Piece, ...] = ()
    num: tuple[Fraction, ...] = ()
    den: tuple[Fraction, ...] = ()

    def param(self, name: str) -> Fraction:
        for key, val in self.params:
            if key == name:
                return val
        raise InvalidFunctionParams(f"{self.catalog}: missing parameter {name!r}")

    def has_param(self, name: str) -> bool:
        return any(key == name for key, _ in self.params)


def arity(spec: FunctionSpec) -> int:
    return 2 if spec.catalog in _TWO_ARG_IDS else 1


# --- constructors -----------------------------------------------------------

def identity() -> FunctionSpec:
    return FunctionSpec("identity")


def linear(c) -> FunctionSpec:
    return FunctionSpec("linear", params=(("c", Fraction(c)),))


def poly_spec(coeffs: Sequence) -> FunctionSpec:
    piece = Piece(Fraction(0), None, tuple(Fraction(c) for c in coeffs))
    return FunctionSpec("piecewise", pieces=(piece,))


def piecewise_spec(pieces: Sequence[Piece]) -> FunctionSpec:
    return FunctionSpec("piecewise", pieces=tuple(pieces))


def sqrt_spec() -> FunctionSpec:
    return FunctionSpec("sqrt")


def ratio_spec(num: Sequence, den: Sequence) -> FunctionSpec:
    return FunctionSpec(
        "ratio",
        num=tuple(Fraction(c) for c in num),
        den=tuple(Fraction(c) for c in den),
    )


def cclass(entry: int, inner: FunctionSpec | None = None, **params) -> FunctionSpec:
    spec = FunctionSpec(
        f"cclass_{entry}",
        params=tuple(sorted((k, Fraction(v)) for k, v in params.items())),
        inner=inner,
    )
    validate_spec(spec)
    return spec


def select_control() -> FunctionSpec:
    return FunctionSpec("select_control")


def validate_spec(spec: FunctionSpec) -> None:
    """Enforce the documented parameter constraints of each catalog entry."""
    cat = spec.catalog
    if cat not in _TWO_ARG_IDS and cat not in _ONE_ARG_IDS:
        raise InvalidFunctionParams(f"unknown catalog id {cat!r}")
    if spec.inner is not None and cat not in _INNER_IDS:
        raise InvalidFunctionParams(f"{cat} does not take an inner function")
    if cat == "linear" and not spec.has_param("c"):
        raise InvalidFunctionParams("linear needs parameter c")
    if cat == "piecewise" and not spec.pieces:
        raise InvalidFunctionParams("piecewise needs at least one piece")
    if cat == "ratio" and (not spec.num or not spec.den):
        raise InvalidFunctionParams("ratio needs num and den coefficients")
    if cat == "cclass_2":
        m = spec.param("m")
        if not 0 < m < 1:
            raise InvalidFunctionParams(f"cclass_2 needs 0 < m < 1, got {m}")
    if cat in ("cclass_3", "cclass_16"):
        if spec.param("r") <= 0:
            raise InvalidFunctionParams(f"{cat} needs r > 0")
    if cat in ("cclass_4", "cclass_7"):
        if spec.param("a") <= 1:
            raise InvalidFunctionParams(f"{cat} needs a > 1")
    if cat == "cclass_5":
        if spec.param("a") < MIN_A_ABOVE_E:
            raise InvalidFunctionParams(
                f"cclass_5 needs a >= {MIN_A_ABOVE_E} (rational bound for a > e)")
    if cat == "cclass_6":
        if spec.param("l") <= 1 or spec.param("r") <= 0:
            raise InvalidFunctionParams("cclass_6 needs l > 1 and r > 0")
    if cat == "cclass_10":
        if spec.param("k") <= 0:
            raise InvalidFunctionParams("cclass_10 needs k > 0")
    if cat == "cclass_14":
        n = spec.param("n")
        if n.denominator != 1 or n < 1:
            raise InvalidFunctionParams("cclass_14 needs integer n >= 1")
    if spec.inner is not None:
        if arity(spec.inner) != 1:
            raise InvalidFunctionParams("inner function must take one argument")
        validate_spec(spec.inner)


def is_exact_spec(spec: FunctionSpec) -> bool:
    """True when every evaluation of the spec stays rational."""
    cat = spec.catalog
    if cat in _TRANSCENDENTAL_IDS or cat == "sqrt":
        return False
    if cat in ("cclass_3", "cclass_16"):
        return spec.param("r").denominator == 1
    if cat == "piecewise":
        return not any(p.use_sqrt for p in spec.pieces)
    if spec.inner is not None:
        return is_exact_spec(spec.inner)
    return True


# --- evaluation --------------------------------------------------------------

def _poly_eval(coeffs: Sequence[Fraction], t: Value) -> Value:
    acc: Value = Fraction(0)
    for c in reversed(coeffs):
        acc = vadd(c, vmul(acc, t))
    return acc


def _pow_value(base: Value, exponent: Fraction) -> Value:
    """base**exponent, exact for integer exponents on Fractions."""
    if isinstance(base, Fraction) and exponent.denominator == 1:
        return base ** int(exponent)
    with workprec():
        b = to_mpf(base)
        if b < 0:
            raise DomainError(f"negative base {base} with fractional exponent")
        return mp.power(b, to_mpf(exponent))


def _log(x: Value) -> Value:
    with workprec():
        xm = to_mpf(x)
        if xm <= 0:
            raise DomainError(f"log of nonpositive value {x}")
        return mp.log(xm)


def _inner_eval(spec: FunctionSpec, default, t: Value) -> Value:
    if spec.inner is not None:
        return evaluate(spec.inner, t)
    return default(t)


def evaluate(spec: FunctionSpec, *args: Value) -> Value:
    """Evaluate a catalog entry; exact where the formula permits."""
    if len(args) != arity(spec):
        raise ArityMismatch(
            f"{spec.catalog} takes {arity(spec)} argument(s), got {len(args)}")
    cat = spec.catalog

    if cat == "identity":
        return args[0]
    if cat == "linear":
        return vmul(spec.param("c"), args[0])
    if cat == "sqrt":
        if vlt(args[0], Fraction(0)):
            raise DomainError(f"sqrt of negative value {args[0]}")
        return value_sqrt(args[0])
    if cat == "piecewise":
        t = args[0]
        for piece in spec.pieces:
            if piece.matches(t):
                if piece.use_sqrt:
                    if vlt(t, Fraction(0)):
                        raise DomainError(f"sqrt of negative value {t}")
                    return value_sqrt(t)
                return _poly_eval(piece.coeffs, t)
        raise DomainError(f"no piece covers argument {t}")
    if cat == "ratio":
        den = _poly_eval(spec.den, args[0])
        if den == 0:
            raise DomainError(f"ratio denominator vanishes at {args[0]}")
        return vdiv(_poly_eval(spec.num, args[0]), den)

    if cat == "select_control":
        return args[1]

    s, t = args
    one = Fraction(1)
    if cat == "cclass_1":
        return vsub(s, t)
    if cat == "cclass_2":
        return vmul(spec.param("m"), s)
    if cat == "cclass_3":
        return vdiv(s, _pow_value(vadd(one, t), spec.param("r")))
    if cat == "cclass_4":
        a = spec.param("a")
        with workprec():
            num = to_mpf(t) + mp.power(to_mpf(a), to_mpf(s))
            return mp.log(num / (1 + to_mpf(t))) / mp.log(to_mpf(a))
    if cat == "cclass_5":
        a = spec.param("a")
        with workprec():
            return mp.log((1 + mp.power(to_mpf(a), to_mpf(s))) / 2)
    if cat == "cclass_6":
        l = spec.param("l")
        r = spec.param("r")
        with workprec():
            expo = 1 / mp.power(1 + to_mpf(t), to_mpf(r))
            return mp.power(to_mpf(s) + to_mpf(l), expo) - to_mpf(l)
    if cat == "cclass_7":
        a = spec.param("a")
        return vmul(s, vdiv(_log(a), _log(vadd(t, a))))
    if cat == "cclass_8":
        factor = vdiv(vadd(one, s), vadd(Fraction(2), s))
        return vsub(s, vmul(factor, vdiv(t, vadd(one, t))))
    if cat == "cclass_9":
        beta = _inner_eval(spec, lambda x: vdiv(one, vadd(Fraction(2), x)), s)
        return vmul(s, beta)
    if cat == "cclass_10":
        k = spec.param("k")
        return vsub(s, vdiv(t, vadd(k, t)))
    if cat == "cclass_11":
        g = _inner_eval(spec, lambda x: vdiv(x, vadd(one, x)), s)
        return vsub(s, g)
    if cat == "cclass_12":
        h = _inner_eval(spec, lambda x: vdiv(x, vadd(one, x)), t)
        return vmul(s, h)
    if cat == "cclass_13":
        return vsub(s, vmul(vdiv(vadd(Fraction(2), t), vadd(one, t)), t))
    if cat == "cclass_14":
        n = spec.param("n")
        with workprec():
            inner = mp.log(1 + mp.power(to_mpf(s), to_mpf(n)))
            return mp.power(inner, 1 / to_mpf(n))
    if cat == "cclass_15":
        return _inner_eval(spec, lambda x: vdiv(vmul(x, x), vadd(one, x)), s)
    if cat == "cclass_16":
        return vdiv(s, _pow_value(vadd(one, s), spec.param("r")))
    raise InvalidFunctionParams(f"unknown catalog id {cat!r}")


def default_tolerance(spec: FunctionSpec) -> Fraction:
    return EXACT_TOLERANCE if is_exact_spec(spec) else APPROX_TOLERANCE


# --- property reports --------------------------------------------------------

@dataclass(frozen=True)
class SampleWitness:
    """A sample point (or pair) with the evaluated values behind a verdict."""

    args: tuple[str, ...]
    values: tuple[str, ...]
    reason: str


@dataclass
class PropertyReport:
    """Outcome of one sampled property check."""

    property: str
    verdict: bool
    grid: str
    witnesses: list[SampleWitness] = field(default_factory=list)
    equality_samples: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict != (not self.witnesses):
            raise AssertionError("verdict must be false iff witnesses exist")


def _fmt(v: Value) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return mp.nstr(v, 20)


def default_grid_1d() -> list[Fraction]:
    return rational_grid(DEFAULT_GRID_LO, DEFAULT_GRID_HI, DEFAULT_GRID_STEP_1D)


def default_grid_2d() -> list[Fraction]:
    return rational_grid(DEFAULT_GRID_LO, DEFAULT_GRID_HI, DEFAULT_GRID_STEP_2D)


def _grid_desc(name: str, grid: Sequence[Fraction]) -> str:
    return f"{name}: {len(grid)} points in [{grid[0]}, {grid[-1]}]"


def _continuity_note(spec: FunctionSpec) -> str:
    if spec.catalog == "piecewise":
        return "continuity: SAMPLED only (user piecewise spec)"
    return "continuity: PROVEN-BY-CATALOG"


def verify_altering(psi: FunctionSpec, grid: Sequence[Fraction] | None = None,
                    witness_cap: int | None = 16) -> PropertyReport:
    """Check psi(0) = 0, positivity on positive samples, and monotonicity
    across consecutive grid points.  Continuity is declared, not sampled."""
    if grid is None:
        grid = default_grid_1d()
    grid = sorted(grid)
    if Fraction(0) not in grid:
        grid = [Fraction(0)] + grid
    witnesses: list[SampleWitness] = []

    def note(args, values, reason):
        if witness_cap is None or len(witnesses) < witness_cap:
            witnesses.append(SampleWitness(args, values, reason))

    at_zero = evaluate(psi, Fraction(0))
    total = 0
    if not (is_exact(at_zero) and at_zero == 0):
        total += 1
        note(("0/1",), (_fmt(at_zero),), "value at zero must be exactly zero")
    prev_t, prev_v = Fraction(0), at_zero
    for t in grid:
        if t <= 0:
            continue
        v = evaluate(psi, t)
        if not vlt(Fraction(0), v):
            total += 1
            note((_fmt(t),), (_fmt(v),), "must be positive for positive argument")
        if vlt(v, prev_v):
            total += 1
            note((_fmt(prev_t), _fmt(t)), (_fmt(prev_v), _fmt(v)),
                 "decrease across consecutive grid points")
        prev_t, prev_v = t, v
    return PropertyReport(
        property="ALTERING",
        verdict=total == 0,
        grid=_grid_desc("1d", grid),
        witnesses=witnesses,
        notes=(_continuity_note(psi),),
    )


def verify_phi_u(phi: FunctionSpec, grid: Sequence[Fraction] | None = None,
                 witness_cap: int | None = 16) -> PropertyReport:
    """Check phi(t) > 0 for sampled t > 0 and phi(0) >= 0."""
    if grid is None:
        grid = default_grid_1d()
    grid = sorted(grid)
    if Fraction(0) not in grid:
        grid = [Fraction(0)] + grid
    witnesses: list[SampleWitness] = []
    total = 0
    for t in grid:
        v = evaluate(phi, t)
        bad = vlt(v, Fraction(0)) if t == 0 else not vlt(Fraction(0), v)
        if bad:
            total += 1
            if witness_cap is None or len(witnesses) < witness_cap:
                reason = ("negative at zero" if t == 0
                          else "must be positive for positive argument")
                witnesses.append(SampleWitness((_fmt(t),), (_fmt(v),), reason))
    return PropertyReport(
        property="PHI_U",
        verdict=total == 0,
        grid=_grid_desc("1d", grid),
        witnesses=witnesses,
        notes=(_continuity_note(phi),),
    )


def verify_cclass(F: FunctionSpec,
                  grid: Sequence[Fraction] | None = None,
                  tolerance: Fraction | None = None,
                  positivity_floor: Fraction = Fraction(0),
                  witness_cap: int | None = 16) -> PropertyReport:
    """Sample both combinator axioms of F over grid x grid.

    Axiom 1: F(s, t) <= s + tolerance everywhere.
    Axiom 2: no sample with s and t both above the positivity floor may sit
    on the equality locus |F(s, t) - s| <= tolerance.

    equality_samples collects the full sampled equality locus so callers can
    pin it down (for s - t it is exactly the t = 0 line, etc.).
    """
    if grid is None:
        grid = default_grid_2d()
    if tolerance is None:
        tolerance = default_tolerance(F)
    grid = sorted(grid)
    witnesses: list[SampleWitness] = []
    equality: list[tuple[Fraction, Fraction]] = []
    total = 0

    def note(s, t, fval, reason):
        nonlocal total
        total += 1
        if witness_cap is None or len(witnesses) < witness_cap:
            witnesses.append(
                SampleWitness((_fmt(s), _fmt(t)), (_fmt(fval),), reason))

    for s in grid:
        for t in grid:
            fval = evaluate(F, s, t)
            if not vle(fval, vadd(s, tolerance)):
                note(s, t, fval, "axiom 1: F(s,t) exceeds s")
                continue
            if vle(vabs(vsub(fval, s)), tolerance):
                equality.append((s, t))
                if vlt(positivity_floor, s) and vlt(positivity_floor, t):
                    note(s, t, fval, "axiom 2: equality with both arguments positive")
    return PropertyReport(
        property="CCLASS",
        verdict=total == 0,
        grid=_grid_desc("2d", grid) + f", tolerance {tolerance}",
        witnesses=witnesses,
        equality_samples=equality,
        notes=(_continuity_note(F),),
    )


def _side_estimate(values: dict[Fraction, Value], xs: list[Fraction],
                   x: Fraction, radius: Fraction, side: int) -> Value | None:
    """Linear extrapolation of f to x from the two nearest samples on one
    side (side=-1 below, +1 above) within the given radius."""
    if side < 0:
        near = [y for y in xs if y < x and x - y <= radius]
        near.sort(reverse=True)
    else:
        near = [y for y in xs if y > x and y - x <= radius]
        near.sort()
    if len(near) < 2:
        return None
    y1, y2 = near[0], near[1]
    f1, f2 = values[y1], values[y2]
    slope = vdiv(vsub(f2, f1), y2 - y1)
    return vadd(f1, vmul(slope, x - y1))


def _semicontinuity_scan(f: FunctionSpec, grid: Sequence[Fraction],
                         neighborhood_radii: Sequence[Fraction],
                         tolerance: Fraction, upper: bool,
                         witness_cap: int | None) -> PropertyReport:
    grid = sorted(grid)
    radii = sorted((Fraction(r) for r in neighborhood_radii), reverse=True)
    if not radii:
        raise InvalidFunctionParams("need at least one neighborhood radius")
    values = {x: evaluate(f, x) for x in grid}
    witnesses: list[SampleWitness] = []
    total = 0
    for x in grid:
        estimates = []
        for side in (-1, 1):
            est = None
            for r in radii:  # shrink; keep the smallest radius with data
                got = _side_estimate(values, grid, x, r, side)
                if got is not None:
                    est = got
            if est is not None:
                estimates.append(est)
        if not estimates:
            continue
        if upper:
            bound = max(estimates, key=to_mpf)
            ok = vle(vsub(bound, tolerance), values[x])
            reason = "value below the sampled limit superior"
        else:
            bound = min(estimates, key=to_mpf)
            ok = vle(values[x], vadd(bound, tolerance))
            reason = "value above the sampled limit inferior"
        if not ok:
            total += 1
            if witness_cap is None or len(witnesses) < witness_cap:
                witnesses.append(SampleWitness(
                    (_fmt(x),), (_fmt(values[x]), _fmt(bound)), reason))
    return PropertyReport(
        property="USC" if upper else "LSC",
        verdict=total == 0,
        grid=_grid_desc("1d", grid) + f", radii {[str(r) for r in radii]}",
        witnesses=witnesses,
        notes=("APPROXIMATE: one-sided extrapolation from finitely many samples",
               _continuity_note(f)),
    )


def verify_lsc(f: FunctionSpec, grid: Sequence[Fraction],
               neighborhood_radii: Sequence[Fraction] = (Fraction(1, 4),
                                                         Fraction(1, 8)),
               tolerance: Fraction = Fraction(1, 16),
               witness_cap: int | None = 16) -> PropertyReport:
    """Approximate lower-semicontinuity check: at each sample x the value
    f(x) may not exceed the extrapolated one-sided limits by more than the
    tolerance.  Marked APPROXIMATE in the report."""
    return _semicontinuity_scan(f, grid, neighborhood_radii, tolerance,
                                upper=False, witness_cap=witness_cap)


def verify_usc(f: FunctionSpec, grid: Sequence[Fraction],
               neighborhood_radii: Sequence[Fraction] = (Fraction(1, 4),
                                                         Fraction(1, 8)),
               tolerance: Fraction = Fraction(1, 16),
               witness_cap: int | None = 16) -> PropertyReport:
    """Mirror of verify_lsc for upper semicontinuity."""
    return _semicontinuity_scan(f, grid, neighborhood_radii, tolerance,
                                upper=True, witness_cap=witness_cap)


@dataclass(frozen=True)
class TripledSpec:
    """A (psi, phi, F) triple fed to the monotonicity check."""

    psi: FunctionSpec
    phi: FunctionSpec
    F: FunctionSpec


def check_monotone_tripled(triple: TripledSpec,
                           grid: Sequence[Fraction] | None = None,
                           tolerance: Fraction = Fraction(1, 10**20),
                           witness_cap: int | None = 16) -> PropertyReport:
    """Brute-force scan: x <= y must give F(psi(x), phi(x)) <= F(psi(y),
    phi(y)) + tolerance.  Every grid pair is examined."""
    if grid is None:
        grid = rational_grid(Fraction(0), Fraction(4), Fraction(1, 16))
    grid = sorted(grid)
    gvals = [evaluate(triple.F, evaluate(triple.psi, x), evaluate(triple.phi, x))
             for x in grid]
    witnesses: list[SampleWitness] = []
    total = 0
    for i, x in enumerate(grid):
        for j in range(i + 1, len(grid)):
            if vle(gvals[i], vadd(gvals[j], tolerance)):
                continue
            total += 1
            if witness_cap is None or len(witnesses) < witness_cap:
                witnesses.append(SampleWitness(
                    (_fmt(x), _fmt(grid[j])),
                    (_fmt(gvals[i]), _fmt(gvals[j])),
                    "composite value decreases"))
    return PropertyReport(
        property="MONOTONE_TRIPLED",
        verdict=total == 0,
        grid=_grid_desc("1d", grid) + f", {len(grid) * (len(grid) - 1) // 2} pairs",
        witnesses=witnesses,
    )
