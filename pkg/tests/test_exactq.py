from decimal import Decimal, getcontext
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levcent.exactq import parse_rational, rat, to_decimal_string, to_text
from oracles import cross_less


def test_rat_reduces():
    assert rat(2, 4) == Fraction(1, 2)
    assert (rat(2, 4).numerator, rat(2, 4).denominator) == (1, 2)


def test_rat_sign_on_numerator():
    r = rat(3, -9)
    assert (r.numerator, r.denominator) == (-1, 3)


def test_rat_unique_zero():
    assert to_text(rat(0, 7)) == "0/1"


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


def test_arithmetic_examples():
    assert rat(1, 5) + rat(-1, 7) == rat(2, 35)
    assert rat(1, 4) * rat(32, 15) == rat(8, 15)
    assert rat(-1, 5) < rat(2, 105)
    assert cross_less(rat(-1, 5), rat(2, 105))
    with pytest.raises(ZeroDivisionError):
        rat(1, 2) / rat(0, 1)


@pytest.mark.parametrize("value, digits, text", [
    (Fraction(1, 3), 4, "0.3333"),
    (Fraction(-1, 5), 2, "-0.20"),
    (Fraction(8, 15), 5, "0.53333"),
    (Fraction(2, 3), 3, "0.667"),
    (Fraction(-1, 1000), 2, "0.00"),
    (Fraction(7), 1, "7.0"),
    (Fraction(-5, 252), 6, "-0.019841"),
])
def test_decimal_rendering(value, digits, text):
    assert to_decimal_string(value, digits) == text


def test_decimal_needs_digits():
    with pytest.raises(ValueError):
        to_decimal_string(Fraction(1, 2), 0)


def test_text_round_trip():
    for q in (Fraction(-5, 252), Fraction(3), Fraction(0), Fraction(59, 495)):
        assert parse_rational(to_text(q)) == q
    assert to_text(Fraction(3)) == "3/1"
    with pytest.raises(ValueError):
        parse_rational("x/2")


ints = st.integers(-10**30, 10**30)
nonzero = ints.filter(bool)


@given(ints, nonzero, ints, nonzero)
def test_field_properties(a, b, c, d):
    x, y = rat(a, b), rat(c, d)
    assert x + y == y + x
    for r in (x + y, x * y, x - y):
        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1
    if x != 0:
        assert x * (y / x) == y


@settings(max_examples=300)
@given(st.lists(st.tuples(ints, nonzero, ints, nonzero), min_size=30, max_size=40))
def test_order_matches_high_precision_decimals(pairs):
    getcontext().prec = 120
    for a, b, c, d in pairs:
        x, y = rat(a, b), rat(c, d)
        dx = Decimal(x.numerator) / Decimal(x.denominator)
        dy = Decimal(y.numerator) / Decimal(y.denominator)
        if dx != dy:
            assert (x < y) == (dx < dy)
        assert (x < y) == cross_less(x, y)
