from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from api.errors import InvalidArgumentError
from api.field import (GOLDEN_S, GOLDEN_X, QuadraticFieldNumber as QFN, format_exact, mpf_to_fraction,
                       parse_exact, render_significant, to_fraction)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
field_numbers = st.builds(QFN, rationals, rationals)


def test_golden_parameters():
    assert GOLDEN_X * GOLDEN_X == 3 * GOLDEN_X - 1
    assert GOLDEN_S * GOLDEN_X == 2
    assert float(GOLDEN_X) == pytest.approx(2.6180339887)
    assert float(GOLDEN_S) == pytest.approx(0.7639320225)


@pytest.mark.parametrize("a, b, expected", [
    (-2, 1, 1),
    (3, -1, 1),
    (2, -1, -1),
    (0, 0, 0),
    (Fraction(-9, 4), Fraction(1), -1),
    (Fraction(9, 4), Fraction(-1), 1),
])
def test_sign_is_exact(a, b, expected):
    assert QFN(a, b).sign() == expected


def test_ordering_against_rationals():
    root5 = QFN(0, 1)
    assert Fraction(2) < root5 < Fraction(9, 4)
    assert QFN(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(QFN(Fraction(1, 2))) == hash(Fraction(1, 2))


@given(field_numbers, field_numbers)
def test_division_inverts_multiplication(p, q):
    assume(q != 0)
    assert (p * q) / q == p


@given(field_numbers)
def test_norm_is_product_with_conjugate(p):
    assert p * p.conjugate() == p.norm()


@given(field_numbers)
def test_sign_matches_float(p):
    approx = float(p)
    assume(abs(approx) > 1e-9)
    assert p.sign() == (1 if approx > 0 else -1)


def test_parse_exact():
    assert parse_exact("2.355") == Fraction(471, 200)
    assert parse_exact("471/200") == Fraction(471, 200)
    assert parse_exact(3) == Fraction(3)
    assert parse_exact("golden1") is GOLDEN_X
    assert parse_exact("golden_s") is GOLDEN_S
    with pytest.raises(InvalidArgumentError):
        parse_exact("abc")
    with pytest.raises(InvalidArgumentError):
        parse_exact("1/0")


def test_format_exact():
    assert format_exact(Fraction(471, 200)) == "471/200"
    assert format_exact(2) == "2/1"
    assert format_exact(GOLDEN_S) == "3/1+-1/1*sqrt5"
    assert format_exact(QFN(Fraction(7, 3))) == "7/3"


def test_to_fraction_is_close_for_irrationals():
    assert abs(to_fraction(GOLDEN_X) - Fraction(26180339887498948482, 10 ** 19)) < Fraction(1, 10 ** 18)


def test_negative_irrationals_keep_their_sign():
    assert float(QFN(0, -1)) == pytest.approx(-2.2360679775)
    assert float(QFN(Fraction(-9, 4), 1)) == pytest.approx(-0.0139320225)
    assert to_fraction(-GOLDEN_X) == -to_fraction(GOLDEN_X)
    assert render_significant(GOLDEN_S - 1, 6) == "-0.236068"


def test_mpf_to_fraction_is_exact():
    assert mpf_to_fraction(mpmath.mpf(-5)) == -5
    assert mpf_to_fraction(mpmath.mpf(3) / 8) == Fraction(3, 8)
    assert mpf_to_fraction(mpmath.mpf(0)) == 0


@pytest.mark.parametrize("value, digits, expected", [
    (Fraction(1), 15, "1.00000000000000"),
    (Fraction(1040896, 1000000), 15, "1.04089600000000"),
    (Fraction(125, 100), 2, "1.2"),
    (Fraction(135, 100), 2, "1.4"),
    (Fraction(123456), 3, "123000"),
    (Fraction(1, 8), 3, "0.125"),
    (Fraction(9999, 10000), 2, "1.0"),
    (Fraction(-1, 2), 2, "-0.50"),
    (Fraction(0), 15, "0.00000000000000"),
])
def test_render_significant(value, digits, expected):
    assert render_significant(value, digits) == expected


def test_render_significant_rejects_zero_digits():
    with pytest.raises(InvalidArgumentError):
        render_significant(Fraction(1), 0)


def test_render_golden():
    assert render_significant(GOLDEN_X, 15) == "2.61803398874989"
