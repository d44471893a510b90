"""Finite generalized metric spaces with exact distance tables, and
brute-force verification of the metric-hierarchy axioms.

A space is a finite point set, a symmetric table of exact rational
distances, and an optional fallback formula (squared difference of the
point values) for pairs the table omits.  The four checkers scan every
triple or quadruple and report the exact violating tuples:

  triangle        d(x,y) <= d(x,u) + d(u,y)
  b-triangle      d(x,y) <= s*(d(x,u) + d(u,y))
  rectangular     d(x,y) <= d(x,u) + d(u,v) + d(v,y)
  b-rectangular   d(x,y) <= s*(d(x,u) + d(u,v) + d(v,y))

In the four-point inequalities u and v are distinct from each other and
from x and y.  Scans run on an integer matrix over the common denominator
of all distances, so verdicts are exact and fast; witnesses are reported
as Fractions in a deterministic order (ascending by (x, y, u, v) labels).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import (
    AsymmetricEntry,
    DuplicateLabel,
    InvalidEntry,
    InvalidParameter,
    InvalidRange,
    NegativeDistance,
    NoFiniteCoefficient,
    TooFewPoints,
    UnknownPoint,
    UnresolvablePair,
)
from .exact import rational_grid

DEFAULT_WITNESS_CAP = 16


class FallbackRule(Enum):
    NONE = "none"
    SQUARED_DIFFERENCE = "sqdiff"


class Axiom(Enum):
    TRIANGLE = "triangle"
    B_TRIANGLE = "b-triangle"
    RECTANGULAR = "rectangular"
    B_RECTANGULAR = "b-rectangular"


class SpaceProfile(Enum):
    GENERIC = "generic"
    METRIC = "metric"


@dataclass(frozen=True)
class Point:
    label: str
    value: Fraction


@dataclass(frozen=True)
class DistanceTable:
    """Symmetric pair -> distance map plus optional fallback formula."""

    entries: dict[tuple[str, str], Fraction]
    fallback: FallbackRule = FallbackRule.NONE

    @staticmethod
    def key(a: str, b: str) -> tuple[str, str]:
        return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class GeneralizedMetricSpace:
    """Finite point set with a total, symmetric, exact distance."""

    points: tuple[Point, ...]
    table: DistanceTable
    claimed_s: Fraction | None = None

    def labels(self) -> list[str]:
        return [p.label for p in self.points]

    def point(self, label: str) -> Point:
        try:
            return self._by_label[label]
        except KeyError:
            raise UnknownPoint(f"no point labeled {label!r}") from None

    def __post_init__(self):
        object.__setattr__(self, "_by_label", {p.label: p for p in self.points})

    def __len__(self) -> int:
        return len(self.points)


def build_space(points: Iterable[Point],
                entries: Iterable[tuple[str, str, Fraction]] = (),
                fallback: FallbackRule = FallbackRule.NONE,
                claimed_s: Fraction | None = None) -> GeneralizedMetricSpace:
    """Construct a space, validating labels, symmetry and separation.

    Distance resolution consults the entries first, then the fallback; the
    construction fails if any pair would stay unresolvable.
    """
    pts = sorted(points, key=lambda p: p.label)
    seen: set[str] = set()
    for p in pts:
        if p.label in seen:
            raise DuplicateLabel(f"duplicate point label {p.label!r}")
        seen.add(p.label)
    table: dict[tuple[str, str], Fraction] = {}
    for a, b, d in entries:
        if a not in seen or b not in seen:
            raise UnknownPoint(f"entry ({a!r}, {b!r}) references unknown point")
        d = Fraction(d)
        if d < 0:
            raise NegativeDistance(f"d({a}, {b}) = {d} is negative")
        if a == b:
            if d != 0:
                raise InvalidEntry(f"self-distance d({a}, {a}) = {d} must be zero")
            continue
        if d == 0:
            raise InvalidEntry(
                f"d({a}, {b}) = 0 between distinct points breaks separation")
        key = DistanceTable.key(a, b)
        previous = table.get(key)
        if previous is not None and previous != d:
            raise AsymmetricEntry(
                f"conflicting values for pair {key}: {previous} vs {d}")
        table[key] = d
    space = GeneralizedMetricSpace(
        points=tuple(pts),
        table=DistanceTable(entries=table, fallback=fallback),
        claimed_s=Fraction(claimed_s) if claimed_s is not None else None,
    )
    if fallback is FallbackRule.NONE:
        for p, q in combinations(space.points, 2):
            if DistanceTable.key(p.label, q.label) not in table:
                raise UnresolvablePair(
                    f"no distance for pair ({p.label}, {q.label}) and no fallback")
    else:
        for p, q in combinations(space.points, 2):
            key = DistanceTable.key(p.label, q.label)
            if key not in table and p.value == q.value:
                raise InvalidEntry(
                    f"fallback gives d({p.label}, {q.label}) = 0 for distinct points")
    return space


def distance(space: GeneralizedMetricSpace, x, y) -> Fraction:
    """Exact distance between two points (labels or Point objects)."""
    a = space.point(x.label if isinstance(x, Point) else x)
    b = space.point(y.label if isinstance(y, Point) else y)
    if a.label == b.label:
        return Fraction(0)
    got = space.table.entries.get(DistanceTable.key(a.label, b.label))
    if got is not None:
        return got
    if space.table.fallback is FallbackRule.SQUARED_DIFFERENCE:
        return (a.value - b.value) ** 2
    raise UnresolvablePair(f"no distance for pair ({a.label}, {b.label})")


# --- axiom reports -----------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """A violating tuple with both sides of the inequality, exactly.

    labels is (x, u, y) for three-point axioms and (x, u, v, y) for the
    four-point ones; lhs is d(x, y) and rhs the scaled path length.
    """

    labels: tuple[str, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass
class AxiomReport:
    axiom: Axiom
    parameter_s: Fraction
    verdict: bool
    witnesses: list[Witness] = field(default_factory=list)
    total_violations: int = 0
    witness_cap: int | None = DEFAULT_WITNESS_CAP

    def __post_init__(self):
        if self.verdict != (self.total_violations == 0):
            raise AssertionError("verdict must be false iff violations exist")


def _int_matrix(space: GeneralizedMetricSpace):
    """All pairwise distances as integers over a common denominator."""
    labels = space.labels()
    dists = {}
    denom = 1
    for a, b in combinations(labels, 2):
        d = distance(space, a, b)
        dists[(a, b)] = d
        denom = denom // math.gcd(denom, d.denominator) * d.denominator
    n = len(labels)
    mat = [[0] * n for _ in range(n)]
    index = {lab: i for i, lab in enumerate(labels)}
    for (a, b), d in dists.items():
        v = int(d * denom)
        mat[index[a]][index[b]] = v
        mat[index[b]][index[a]] = v
    return labels, mat, denom


def _check_three_point(space: GeneralizedMetricSpace, s: Fraction,
                       axiom: Axiom, witness_cap: int | None) -> AxiomReport:
    labels, mat, denom = _int_matrix(space)
    p, q = s.numerator, s.denominator
    n = len(labels)
    witnesses: list[Witness] = []
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            lhs_scaled = q * mat[i][j]
            for u in range(n):
                if u == i or u == j:
                    continue
                path = mat[i][u] + mat[u][j]
                if lhs_scaled > p * path:
                    total += 1
                    if witness_cap is None or len(witnesses) < witness_cap:
                        witnesses.append(Witness(
                            labels=(labels[i], labels[u], labels[j]),
                            lhs=Fraction(mat[i][j], denom),
                            rhs=s * Fraction(path, denom)))
    return AxiomReport(axiom=axiom, parameter_s=s, verdict=total == 0,
                       witnesses=witnesses, total_violations=total,
                       witness_cap=witness_cap)


def _check_four_point(space: GeneralizedMetricSpace, s: Fraction,
                      axiom: Axiom, witness_cap: int | None) -> AxiomReport:
    labels, mat, denom = _int_matrix(space)
    p, q = s.numerator, s.denominator
    n = len(labels)
    witnesses: list[Witness] = []
    total = 0
    for i in range(n):
        row_i = mat[i]
        for j in range(i + 1, n):
            lhs_scaled = q * mat[i][j]
            row_j = mat[j]
            others = [u for u in range(n) if u != i and u != j]
            for u in others:
                head = row_i[u]
                row_u = mat[u]
                for v in others:
                    if v == u:
                        continue
                    path = head + row_u[v] + row_j[v]
                    if lhs_scaled > p * path:
                        total += 1
                        if witness_cap is None or len(witnesses) < witness_cap:
                            witnesses.append(Witness(
                                labels=(labels[i], labels[u], labels[v], labels[j]),
                                lhs=Fraction(mat[i][j], denom),
                                rhs=s * Fraction(path, denom)))
    return AxiomReport(axiom=axiom, parameter_s=s, verdict=total == 0,
                       witnesses=witnesses, total_violations=total,
                       witness_cap=witness_cap)


def _require_positive(s: Fraction) -> Fraction:
    s = Fraction(s)
    if s <= 0:
        raise InvalidParameter(f"coefficient s must be positive, got {s}")
    return s


def check_triangle(space: GeneralizedMetricSpace,
                   witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    return _check_three_point(space, Fraction(1), Axiom.TRIANGLE, witness_cap)


def check_b_triangle(space: GeneralizedMetricSpace, s,
                     witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    return _check_three_point(space, _require_positive(s), Axiom.B_TRIANGLE,
                              witness_cap)


def check_rectangular(space: GeneralizedMetricSpace,
                      witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    return _check_four_point(space, Fraction(1), Axiom.RECTANGULAR, witness_cap)


def check_b_rectangular(space: GeneralizedMetricSpace, s,
                        witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    return _check_four_point(space, _require_positive(s), Axiom.B_RECTANGULAR,
                             witness_cap)


def minimal_b_rect_s(space: GeneralizedMetricSpace) -> Fraction:
    """Tightest coefficient: max of d(x,y) / (d(x,u) + d(u,v) + d(v,y)).

    The four-point inequality holds at the returned value and fails for any
    smaller one.  Spaces satisfying the separation axioms cannot produce a
    zero path with positive separation; the guard stays for defense.
    """
    if len(space) < 4:
        raise TooFewPoints("need at least four points for a quadruple scan")
    _, mat, _ = _int_matrix(space)
    n = len(mat)
    best_num, best_den = 0, 1
    for i in range(n):
        for j in range(i + 1, n):
            num = mat[i][j]
            others = [u for u in range(n) if u != i and u != j]
            for u in others:
                for v in others:
                    if v == u:
                        continue
                    den = mat[i][u] + mat[u][v] + mat[v][j]
                    if den == 0:
                        if num > 0:
                            raise NoFiniteCoefficient(
                                "zero path length against positive separation")
                        continue
                    if num * best_den > best_num * den:
                        best_num, best_den = num, den
    return Fraction(best_num, best_den)


def sample_interval(lo, hi, step) -> list[Point]:
    """Finite stand-in for a real interval: exact grid, hi always included.

    Labels are the canonical string of each rational value.
    """
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if lo > hi:
        raise InvalidRange(f"lo={lo} exceeds hi={hi}")
    if step <= 0:
        raise InvalidRange(f"step must be positive, got {step}")
    return [Point(label=str(v), value=v) for v in rational_grid(lo, hi, step)]


def generate_random_space(n: int, seed: int,
                          profile: SpaceProfile = SpaceProfile.GENERIC,
                          ) -> GeneralizedMetricSpace:
    """Deterministic random space for property tests.

    GENERIC draws a positive symmetric table; METRIC additionally applies a
    shortest-path closure so the triangle inequality holds by construction.
    """
    if n < 1:
        raise InvalidParameter(f"need n >= 1 points, got {n}")
    rng = random.Random(seed)
    width = len(str(n - 1))
    points = [Point(label=f"p{i:0{width}d}", value=Fraction(i)) for i in range(n)]
    labels = [p.label for p in points]
    dist: dict[tuple[str, str], Fraction] = {}
    for a, b in combinations(labels, 2):
        dist[(a, b)] = Fraction(rng.randint(1, 64), rng.randint(1, 8))
    if profile is SpaceProfile.METRIC:
        # Floyd-Warshall closure keeps symmetry and positivity.
        def get(a: str, b: str) -> Fraction:
            if a == b:
                return Fraction(0)
            return dist[(a, b) if a <= b else (b, a)]

        for k in labels:
            for a, b in combinations(labels, 2):
                via = get(a, k) + get(k, b)
                if via < dist[(a, b)]:
                    dist[(a, b)] = via
    entries = [(a, b, d) for (a, b), d in sorted(dist.items())]
    return build_space(points, entries, FallbackRule.NONE)
