from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from api.field import GOLDEN_X
from api.polynomial import BivariatePolynomial as P, poly_add, poly_eval, poly_mul, poly_product

X, Y = P.x(), P.y()

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polynomials = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), coefficients, max_size=6,
).map(P)
points = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@pytest.mark.parametrize("polynomial, text", [
    (X ** 3 + X ** 2 + X + Y, "x^3 + x^2 + x + y"),
    ((X + Y) ** 2, "x^2 + 2*x*y + y^2"),
    ((X + Y).scale(Fraction(1, 2)), "1/2*x + 1/2*y"),
    (P.zero(), "0"),
    (-X, "-x"),
    (X - 1, "x - 1"),
    (X * Y ** 2 - 3 * Y + Fraction(2, 3), "x*y^2 - 3*y + 2/3"),
])
def test_rendering_order(polynomial, text):
    assert str(polynomial) == text


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        P({(-1, 0): 1})


def test_zero_coefficients_dropped():
    assert P({(2, 0): 0, (0, 1): 1}) == Y
    assert (X - X).is_zero()


def test_corank_nullity_expansion():
    assert P.from_corank_nullity({(1, 0): 1}) == X - 1
    assert P.from_corank_nullity({(2, 1): 3}) == 3 * (X - 1) ** 2 * (Y - 1)


def test_zero_power_zero_is_one():
    assert P.one().evaluate(0, 0) == 1
    assert X.evaluate(0, 5) == 0
    assert (X ** 2 + Y).evaluate(Fraction(0), Fraction(0)) == 0


def test_evaluate_in_quadratic_field():
    minimal = X * X - 3 * X + 1
    assert minimal.evaluate(GOLDEN_X, 0) == 0
    assert (X + Y)(GOLDEN_X, 1) == GOLDEN_X + 1


def test_accessors():
    polynomial = P({(3, 0): Fraction(1, 4), (0, 1): Fraction(3, 4)})
    assert polynomial.coefficient(3, 0) == Fraction(1, 4)
    assert polynomial.coefficient(1, 1) == 0
    assert polynomial.total() == 1
    assert polynomial.x_degree == 3 and polynomial.y_degree == 1
    assert polynomial.is_nonnegative()
    assert not polynomial.has_integer_coefficients()
    assert polynomial.transpose() == P({(0, 3): Fraction(1, 4), (1, 0): Fraction(3, 4)})


def test_poly_product():
    assert poly_product([X + 1, X - 1, Y]) == X ** 2 * Y - Y
    assert poly_product([]) == P.one()


@given(polynomials, polynomials)
def test_addition_and_multiplication_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polynomials, polynomials, polynomials)
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polynomials, polynomials, points, points)
def test_evaluation_is_a_ring_homomorphism(p, q, a, b):
    assert (p * q).evaluate(a, b) == p.evaluate(a, b) * q.evaluate(a, b)
    assert (p + q).evaluate(a, b) == p.evaluate(a, b) + q.evaluate(a, b)


@given(polynomials, polynomials, points, points)
def test_named_operations_agree_with_operators(p, q, a, b):
    assert poly_add(p, q) == p + q
    assert poly_mul(p, q) == p * q
    assert poly_eval(poly_mul(p, q), a, b) == poly_eval(p, a, b) * poly_eval(q, a, b)
    assert poly_eval(p, a, b) == p(a, b)


def test_named_operations_on_small_cases():
    assert poly_add(X, Y) == X + Y
    assert poly_mul(X + Y, X - Y) == X ** 2 - Y ** 2
    assert poly_eval(X + Y, 1, 1) == 2
    assert poly_eval(X * X - 3 * X + 1, GOLDEN_X, 0) == 0


@given(polynomials, points, points)
def test_transpose_swaps_arguments(p, a, b):
    assert p.transpose().evaluate(a, b) == p.evaluate(b, a)


@given(polynomials)
def test_hash_consistent_with_equality(p):
    same = P(dict(p.items()))
    assert same == p and hash(same) == hash(p)
