"""q-shifted factorials: finite, infinite, and products."""

from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qident.errors import NoConvergence, PoleEncountered
from qident.qpoch import QPochSpec, poch_vanishes, qpoch, qpoch_inf, qpoch_product
from qident.scalars import Precision

F = Fraction

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=30)
qs = st.fractions(min_value=F(1, 10), max_value=F(9, 10), max_denominator=30)


def test_qpoch_known_values():
    assert qpoch(F(1, 2), F(1, 2), 2) == F(3, 8)
    assert qpoch(F(1, 3), F(1, 2), 0) == 1
    assert qpoch(F(0), F(1, 2), 5) == 1
    assert qpoch(F(1), F(1, 2), 3) == 0


def test_qpoch_negative_length_is_error():
    with pytest.raises(ValueError):
        qpoch(F(1, 2), F(1, 2), -1)


@given(small_rationals, qs, st.integers(0, 8), st.integers(0, 8))
def test_qpoch_shift_identity(a, q, j, k):
    # (a)_{j+k} = (a)_j * (a q^j)_k
    assert qpoch(a, q, j + k) == qpoch(a, q, j) * qpoch(a * q**j, q, k)


@given(qs, st.integers(0, 6), st.integers(0, 4))
def test_qpoch_terminating_zero(q, big_n, extra):
    # (q^-N)_k vanishes exactly when k > N
    assert qpoch(q**-big_n, q, big_n + 1 + extra) == 0
    assert qpoch(q**-big_n, q, big_n) != 0


def test_qpoch_inf_endpoints():
    prec = Precision(60)
    assert qpoch_inf(F(0), F(1, 2), prec) == 1
    assert qpoch_inf(F(1), F(1, 2), prec) == 0


def test_qpoch_inf_against_partial_products():
    prec = Precision(60)
    value = qpoch_inf(F(1, 2), F(1, 2), prec)
    with localcontext() as ctx:
        ctx.prec = 80
        product = Decimal(1)
        power = Decimal(1)
        a = q = Decimal(1) / 2
        for _ in range(500):
            product *= 1 - a * power
            power *= q
    assert abs(value - product) < Decimal(10) ** -50


@settings(max_examples=30)
@given(small_rationals.filter(lambda a: a < 1), qs, st.integers(0, 8))
def test_qpoch_inf_ratio_recovers_finite(a, q, k):
    # (a)_k == (a)_oo / (a q^k)_oo whenever the tail products are nonzero
    prec = Precision(50)
    ratio = qpoch_inf(a, q, prec) / qpoch_inf(a * q**k, q, prec)
    exact = qpoch(a, q, k)
    assert abs(ratio - Decimal(exact.numerator) / Decimal(exact.denominator)) < Decimal(
        10
    ) ** -40


def test_qpoch_inf_needs_contracting_q():
    with pytest.raises(NoConvergence):
        qpoch_inf(F(1, 2), F(3, 2), Precision(30))


def test_poch_vanishes_detects_inverse_powers():
    q = F(1, 2)
    assert poch_vanishes(F(4), q, 3)  # 4 == q^-2, factor at j=2
    assert not poch_vanishes(F(4), q, 2)
    assert poch_vanishes(F(8), q, None)
    assert not poch_vanishes(F(3), q, None)
    assert not poch_vanishes(F(-5), q, None)


def test_qpoch_product_empty_is_one():
    assert qpoch_product([], [], F(1, 2)) == 1


def test_qpoch_product_cancellation():
    q = F(1, 3)
    assert qpoch_product([(F(2, 5), 4)], [(F(2, 5), 4)], q) == 1


def test_qpoch_product_matches_manual():
    q = F(1, 3)
    a, b, c, d = F(2, 5), F(3, 7), F(1, 2), F(5, 6)
    got = qpoch_product([(a, 3), (b, 2)], [(c, 4), (d, 1)], q)
    want = qpoch(a, q, 3) * qpoch(b, q, 2) / (qpoch(c, q, 4) * qpoch(d, q, 1))
    assert got == want


def test_qpoch_product_reports_pole():
    q = F(1, 2)
    with pytest.raises(PoleEncountered):
        qpoch_product([], [QPochSpec(F(4), 3)], q)  # 4 = q^-2 makes (4;q)_3 = 0


def test_qpoch_product_infinite_needs_precision():
    with pytest.raises(NoConvergence):
        qpoch_product([(F(1, 2), None)], [], F(1, 2))


def test_qpoch_product_infinite_ratio():
    # (a)_oo / (a q^2)_oo == (a)_2
    q = F(1, 3)
    a = F(1, 5)
    prec = Precision(45)
    got = qpoch_product([(a, None)], [(a * q**2, None)], q, prec=prec)
    exact = qpoch(a, q, 2)
    assert abs(got - Decimal(exact.numerator) / Decimal(exact.denominator)) < Decimal(
        10
    ) ** -40
