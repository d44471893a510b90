"""Exact arithmetic helpers.

Everything the toolkit can compute inside the rational field is computed
with fractions.Fraction and compared exactly.  Formulas that leave the
rationals (logarithms, fractional powers, square roots of non-squares) are
evaluated with mpmath at a configurable number of significant digits; the
FPRECT_PRECISION environment variable overrides the default of 50.

A "value" throughout the package is either a Fraction (exact) or an
mpmath.mpf (high precision).  The v* helpers below do mixed arithmetic and
comparisons, promoting to mpf only when one side is already inexact.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp

from .errors import InvalidRange

Value = Union[Fraction, mpmath.mpf]

DEFAULT_PRECISION = 50

ZERO = Fraction(0)
ONE = Fraction(1)


def precision() -> int:
    """Significant digits for high-precision evaluation (>= 15)."""
    raw = os.environ.get("FPRECT_PRECISION", "")
    try:
        digits = int(raw) if raw else DEFAULT_PRECISION
    except ValueError:
        digits = DEFAULT_PRECISION
    return max(digits, 15)


def workprec():
    """Context manager pinning mpmath to the configured precision."""
    return mp.workdps(precision())


def parse_rational(text) -> Fraction:
    """Parse "p/q", integer, or decimal literals to an exact Fraction.

    Decimal strings are exact: "0.05" -> 1/20.  Fractions and ints pass
    through unchanged.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError(
            f"refusing float {text!r}: pass a string or Fraction for exactness")
    if isinstance(text, str):
        s = text.strip()
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {text!r}") from exc
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(q: Fraction) -> str:
    """Canonical "p/q" form, lowest terms, positive denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rational_grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    """Fractions lo, lo+step, ... capped so hi is always the last point."""
    if step <= 0 or lo > hi:
        raise InvalidRange(f"bad grid: lo={lo} hi={hi} step={step}")
    out = []
    v = lo
    while v < hi:
        out.append(v)
        v += step
    out.append(hi)
    return out


def to_mpf(x: Value) -> mpmath.mpf:
    if isinstance(x, Fraction):
        with workprec():
            return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


def is_exact(x: Value) -> bool:
    return isinstance(x, Fraction)


def _both_exact(a: Value, b: Value) -> bool:
    return isinstance(a, Fraction) and isinstance(b, Fraction)


def vadd(a: Value, b: Value) -> Value:
    if _both_exact(a, b):
        return a + b
    with workprec():
        return to_mpf(a) + to_mpf(b)


def vsub(a: Value, b: Value) -> Value:
    if _both_exact(a, b):
        return a - b
    with workprec():
        return to_mpf(a) - to_mpf(b)


def vmul(a: Value, b: Value) -> Value:
    if _both_exact(a, b):
        return a * b
    with workprec():
        return to_mpf(a) * to_mpf(b)


def vdiv(a: Value, b: Value) -> Value:
    if _both_exact(a, b):
        if b == 0:
            raise ZeroDivisionError("exact division by zero")
        return a / b
    with workprec():
        return to_mpf(a) / to_mpf(b)


def vle(a: Value, b: Value) -> bool:
    if _both_exact(a, b):
        return a <= b
    return to_mpf(a) <= to_mpf(b)


def vlt(a: Value, b: Value) -> bool:
    if _both_exact(a, b):
        return a < b
    return to_mpf(a) < to_mpf(b)


def vabs(a: Value) -> Value:
    return abs(a)


def vmax(*xs: Value) -> Value:
    best = xs[0]
    for x in xs[1:]:
        if vlt(best, x):
            best = x
    return best


def vmin(*xs: Value) -> Value:
    best = xs[0]
    for x in xs[1:]:
        if vlt(x, best):
            best = x
    return best


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Square root of q when q is a perfect rational square, else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def value_sqrt(x: Value) -> Value:
    """Exact square root when possible, mpf otherwise."""
    if isinstance(x, Fraction):
        root = exact_sqrt(x)
        if root is not None:
            return root
    with workprec():
        return mp.sqrt(to_mpf(x))
