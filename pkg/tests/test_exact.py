"""Rational parsing/formatting and mixed-arithmetic helper tests."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fprect import InvalidRange, format_rational, parse_rational, rational_grid
from fprect.exact import (
    exact_sqrt,
    is_exact,
    precision,
    to_mpf,
    value_sqrt,
    vadd,
    vle,
    vmax,
    vmin,
    vmul,
)


def test_parse_forms():
    assert parse_rational("1/5") == F(1, 5)
    assert parse_rational("0.05") == F(1, 20)
    assert parse_rational("3") == F(3)
    assert parse_rational("-1/2") == F(-1, 2)
    assert parse_rational(F(2, 7)) == F(2, 7)
    assert parse_rational(4) == F(4)


def test_parse_rejects_junk():
    for bad in ("zebra", "1/0", "", "1.2.3", None, object()):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        parse_rational(0.1)


@given(st.fractions())
def test_format_roundtrip(q):
    text = format_rational(q)
    num, den = text.split("/")
    assert int(den) > 0
    assert parse_rational(text) == q


def test_grid_includes_hi():
    assert rational_grid(F(0), F(1), F(3, 8)) == [F(0), F(3, 8), F(3, 4), F(1)]
    with pytest.raises(InvalidRange):
        rational_grid(F(1), F(0), F(1))


def test_mixed_arithmetic_promotes():
    exact = vadd(F(1, 3), F(1, 6))
    assert is_exact(exact) and exact == F(1, 2)
    mixed = vmul(to_mpf(F(1, 3)), F(3))
    assert not is_exact(mixed)
    assert vle(F(1), mixed) and vle(mixed, F(1))


def test_vmax_vmin():
    assert vmax(F(1), F(3), F(2)) == F(3)
    assert vmin(F(1), to_mpf(F(1, 2))) == to_mpf(F(1, 2))


def test_exact_sqrt():
    assert exact_sqrt(F(9, 16)) == F(3, 4)
    assert exact_sqrt(F(2)) is None
    assert exact_sqrt(F(-1)) is None
    assert value_sqrt(F(1, 4)) == F(1, 2)
    assert not is_exact(value_sqrt(F(2)))


def test_precision_env_override(monkeypatch):
    monkeypatch.setenv("FPRECT_PRECISION", "80")
    assert precision() == 80
    monkeypatch.setenv("FPRECT_PRECISION", "3")
    assert precision() == 15  # floor keeps comparisons meaningful
    monkeypatch.delenv("FPRECT_PRECISION")
    assert precision() == 50
