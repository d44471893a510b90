"""Orbit iteration x, Tx, T^2 x, ... with convergence diagnostics.

On a finite space the orbit either hits a fixed point or repeats; detection
is by exact label membership, so both outcomes are decidable.  The trace
records the diagnostic quantities the fixed-point argument monitors: the
step and skip distances, the weights along the orbit, and the augmented
step distances d(x_n, x_{n+1}) + phi(x_n) + phi(x_{n+1}).

When a fixed point is found the orbit is extended by two confirming
repeats so the tails of all three diagnostic sequences are visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .contraction import ContractionInstance
from .errors import InvalidParameter
from .exact import Value, vadd, vle
from .spaces import distance


class SolveStatus(Enum):
    FIXED_POINT = "fixed_point"
    PERIODIC = "periodic"
    MAX_ITER = "max_iter"


@dataclass(frozen=True)
class IterationTrace:
    """Orbit labels plus the diagnostic sequences derived from them."""

    orbit: tuple[str, ...]
    step_dist: tuple[Fraction, ...]
    skip_dist: tuple[Fraction, ...]
    weights: tuple[Value, ...]
    augmented: tuple[Value, ...]


@dataclass(frozen=True)
class FixedPointResult:
    status: SolveStatus
    point: str | None
    period: int | None
    iterations: int
    trace: IterationTrace


def _build_trace(inst: ContractionInstance, orbit: list[str]) -> IterationTrace:
    pts = [inst.space.point(lab) for lab in orbit]
    step = tuple(distance(inst.space, pts[i], pts[i + 1])
                 for i in range(len(pts) - 1))
    skip = tuple(distance(inst.space, pts[i], pts[i + 2])
                 for i in range(len(pts) - 2))
    weights = tuple(inst.weight(p) for p in pts)
    augmented = tuple(vadd(step[i], vadd(weights[i], weights[i + 1]))
                      for i in range(len(step)))
    return IterationTrace(orbit=tuple(orbit), step_dist=step, skip_dist=skip,
                          weights=weights, augmented=augmented)


def picard_iterate(inst: ContractionInstance, x0: str, max_iter: int | None = None,
                   tol: Fraction = Fraction(0)) -> FixedPointResult:
    """Iterate the self-map from x0 until a fixed point, a cycle, or the
    iteration budget (default 10 * |X|) runs out."""
    if max_iter is None:
        max_iter = 10 * len(inst.space)
    if max_iter < 1:
        raise InvalidParameter(f"max_iter must be >= 1, got {max_iter}")
    current = inst.space.point(x0)
    orbit = [current.label]
    first_seen = {current.label: 0}
    status = SolveStatus.MAX_ITER
    point: str | None = None
    period: int | None = None
    iterations = max_iter
    for step in range(max_iter):
        nxt = inst.image(current)
        if vle(distance(inst.space, current, nxt), tol):
            status = SolveStatus.FIXED_POINT
            point = current.label
            iterations = step
            orbit.extend([current.label, current.label])  # confirming repeats
            break
        if nxt.label in first_seen:
            status = SolveStatus.PERIODIC
            period = len(orbit) - first_seen[nxt.label]
            iterations = step + 1
            orbit.append(nxt.label)
            break
        orbit.append(nxt.label)
        first_seen[nxt.label] = len(orbit) - 1
        current = nxt
    return FixedPointResult(status=status, point=point, period=period,
                            iterations=iterations,
                            trace=_build_trace(inst, orbit))


@dataclass(frozen=True)
class DecreasingReport:
    ok: bool
    first_violation_index: int | None


def verify_decreasing(trace: IterationTrace) -> DecreasingReport:
    """True iff the augmented step sequence never increases."""
    for i in range(1, len(trace.augmented)):
        if not vle(trace.augmented[i], trace.augmented[i - 1]):
            return DecreasingReport(ok=False, first_violation_index=i)
    return DecreasingReport(ok=True, first_violation_index=None)


@dataclass(frozen=True)
class TailReport:
    ok: bool
    index: int | None  # first index from which all entries stay <= tol


@dataclass(frozen=True)
class VanishingReport:
    step: TailReport
    skip: TailReport
    weights: TailReport

    @property
    def ok(self) -> bool:
        return self.step.ok and self.skip.ok and self.weights.ok


def _tail(values, tol) -> TailReport:
    index = None
    for i, v in enumerate(values):
        if vle(v, tol):
            if index is None:
                index = i
        else:
            index = None
    return TailReport(ok=index is not None, index=index)


def check_vanishing(trace: IterationTrace,
                    tol: Fraction = Fraction(0)) -> VanishingReport:
    """Do the step distances, skip distances and weights settle below tol,
    and from which index on."""
    return VanishingReport(step=_tail(trace.step_dist, tol),
                           skip=_tail(trace.skip_dist, tol),
                           weights=_tail(trace.weights, tol))


@dataclass(frozen=True)
class FixedPointCheck:
    distance_ok: bool
    weight_ok: bool
    distance: Fraction
    weight: Value

    @property
    def ok(self) -> bool:
        return self.distance_ok and self.weight_ok


def verify_fixed_point(inst: ContractionInstance, z: str,
                       tol: Fraction = Fraction(0)) -> FixedPointCheck:
    """Check d(z, Tz) <= tol and weight(z) <= tol, reported separately."""
    zp = inst.space.point(z)
    d = distance(inst.space, zp, inst.image(zp))
    w = inst.weight(zp)
    return FixedPointCheck(distance_ok=vle(d, tol), weight_ok=vle(w, tol),
                           distance=d, weight=w)


def uniqueness_scan(inst: ContractionInstance,
                    tol: Fraction = Fraction(0)) -> list[str]:
    """All points within tol of being fixed, in label order."""
    out = []
    for p in inst.space.points:
        if vle(distance(inst.space, p, inst.image(p)), tol):
            out.append(p.label)
    return out


def exhaustive_solve(inst: ContractionInstance, max_iter: int | None = None,
                     tol: Fraction = Fraction(0)) -> dict[str, FixedPointResult]:
    """picard_iterate from every start point; keyed by start label."""
    return {lab: picard_iterate(inst, lab, max_iter=max_iter, tol=tol)
            for lab in inst.space.labels()}
