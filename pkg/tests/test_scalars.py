"""Scalar arithmetic policy: exactness, promotion, powers."""

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qident.errors import ZeroToNegativePower
from qident.scalars import (
    Precision,
    format_rational,
    parse_rational,
    scalar_pow,
    to_decimal,
    working_precision,
)

rationals = st.fractions(max_denominator=1000)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def test_scalar_pow_basic():
    assert scalar_pow(Fraction(1, 2), 3) == Fraction(1, 8)
    assert scalar_pow(Fraction(5, 9), 0) == 1
    assert scalar_pow(Fraction(2, 3), -2) == Fraction(9, 4)


def test_scalar_pow_zero_to_negative_power():
    with pytest.raises(ZeroToNegativePower):
        scalar_pow(Fraction(0), -1)
    with pytest.raises(ZeroToNegativePower):
        scalar_pow(Decimal(0), -3)


def test_precision_defaults():
    prec = Precision()
    assert prec.digits == 60
    assert prec.tolerance == pytest.approx(1e-30)


def test_precision_rejects_low_digits():
    with pytest.raises(ValueError):
        Precision(digits=10)


def test_precision_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        Precision(digits=20, tolerance=2.0)


@given(rationals, rationals)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@given(rationals, nonzero_rationals)
def test_mul_div_roundtrip(a, b):
    assert (a * b) / b == a


@given(nonzero_rationals)
def test_decimal_string_roundtrip_keeps_digits(a):
    # promoting to D digits and back through a string should agree to D-2 digits
    prec = Precision(digits=40)
    d = to_decimal(a, prec)
    with working_precision(prec):
        back = Decimal(str(d))
        err = abs(back - to_decimal(a, prec))
    assert err <= abs(d) * Decimal(10) ** -(prec.digits - 2)


def test_rational_parsing():
    assert parse_rational("3/5") == Fraction(3, 5)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_rational("x/y")


def test_rational_formatting_roundtrip():
    for f in [Fraction(3, 5), Fraction(-2, 7), Fraction(4)]:
        assert parse_rational(format_rational(f)) == f
