from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tbh.errors import NegativeRadicand
from tbh.scalars import (
    Approx,
    approx_eq,
    rational_from_str,
    rational_to_str,
    sqrt_checked,
)

rationals = st.fractions(max_denominator=1000)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def test_rational_arith_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(3, 4) * 0 == 0
    assert Fraction(-1, 2) / Fraction(-1, 2) == 1


def test_rational_always_reduced():
    x = Fraction(6, 4)
    assert (x.numerator, x.denominator) == (3, 2)
    assert Fraction(1, -2).denominator == 2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / Fraction(0)


@given(rationals, rationals)
def test_addition_round_trips(a, b):
    assert (a + b) - b == a


@given(rationals, nonzero_rationals)
def test_multiplication_round_trips(a, b):
    assert (a * b) / b == a


def test_sqrt_examples():
    assert sqrt_checked(Fraction(9, 4)).value == 1.5
    assert sqrt_checked(0).value == 0.0
    root = sqrt_checked(Fraction(3, 4))
    assert abs(root.value**2 - 0.75) < 1e-12


def test_sqrt_negative_raises():
    with pytest.raises(NegativeRadicand):
        sqrt_checked(Fraction(-1, 4))


@given(st.fractions(min_value=0, max_denominator=10**6))
def test_sqrt_squares_back(x):
    root = sqrt_checked(x)
    assert approx_eq(root.value * root.value, float(x))


def test_approx_equality_is_tolerant_and_symmetric():
    a = Approx(1.0)
    b = Approx(1.0 + 1e-13)
    assert a == b and b == a
    assert Approx(1.0) != Approx(1.001)
    assert Approx(0.5) == Fraction(1, 2)


def test_approx_arithmetic_stays_approx():
    x = Approx(2.0)
    assert isinstance(x + 1, Approx)
    assert isinstance(1 - x, Approx)
    assert (x * Fraction(1, 2)).value == 1.0
    assert (-x).value == -2.0
    assert (3 / x).value == 1.5


def test_serialization_round_trip():
    assert rational_to_str(Fraction(5, 6)) == "5/6"
    assert rational_to_str(Fraction(3)) == "3/1"
    assert rational_from_str("5/6") == Fraction(5, 6)
    assert rational_from_str("-7") == -7


@given(rationals)
def test_serialization_round_trips_everything(x):
    assert rational_from_str(rational_to_str(x)) == x
