"""
Exact Parameter Arithmetic

Parameters of the certificates are exact: decimals are parsed as rationals
(2.355 -> 471/200) and the golden-ratio parameters live in Q(sqrt 5).
This module provides:
- QuadraticFieldNumber: a + b*sqrt(5) with exact field operations and ordering
- parse_exact: CLI/YAML parameter strings to exact values
- render_significant: exact half-even rounding to a fixed number of significant digits
"""
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

import mpmath

from .errors import InvalidArgumentError

RENDER_PRECISION_BITS = 256


@total_ordering
class QuadraticFieldNumber:
    """The number a + b*sqrt(5) with rational a and b."""

    __slots__ = ("a", "b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def lift(cls, value) -> Optional["QuadraticFieldNumber"]:
        """Embed ints and Fractions; None for anything else."""
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadraticFieldNumber":
        return QuadraticFieldNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5), decided by comparing a^2 with 5*b^2."""
        a_sign = (self.a > 0) - (self.a < 0)
        b_sign = (self.b > 0) - (self.b < 0)
        if b_sign == 0:
            return a_sign
        if a_sign == 0 or a_sign == b_sign:
            return b_sign
        return a_sign if self.a * self.a > 5 * self.b * self.b else b_sign

    # --- field operations ---

    def __add__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return QuadraticFieldNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticFieldNumber(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return QuadraticFieldNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return QuadraticFieldNumber(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticFieldNumber":
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return QuadraticFieldNumber(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticFieldNumber(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # --- comparison ---

    def __eq__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        other = self.lift(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    # --- conversion ---

    def approximate_fraction(self, bits: int = RENDER_PRECISION_BITS) -> Fraction:
        """Binary approximation with a `bits`-bit mantissa, returned as an exact Fraction."""
        if self.b == 0:
            return self.a
        with mpmath.workprec(bits):
            value = (mpmath.mpf(self.a.numerator) / self.a.denominator
                     + mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(5))
        return mpf_to_fraction(value)

    def __float__(self) -> float:
        return float(self.approximate_fraction())

    def __repr__(self) -> str:
        return f"QuadraticFieldNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt(5)"


Exact = Union[Fraction, QuadraticFieldNumber]


def mpf_to_fraction(value) -> Fraction:
    """Exact value of a finite mpf; the mantissa in man_exp carries no sign."""
    sign, mantissa, exponent, _ = value._mpf_
    result = Fraction(int(mantissa)) * Fraction(2) ** int(exponent)
    return -result if sign else result


# x = (3 + sqrt 5)/2 and s = (6 + 2 sqrt 5)/(7 + 3 sqrt 5) = 3 - sqrt 5
GOLDEN_X = QuadraticFieldNumber(Fraction(3, 2), Fraction(1, 2))
GOLDEN_S = QuadraticFieldNumber(3, -1)

FIELD_TOKENS = {
    "golden1": GOLDEN_X,
    "golden_s": GOLDEN_S,
}


def parse_exact(text) -> Exact:
    """
    Parse a parameter into an exact value.

    Accepts the field tokens, decimals ("2.355"), rationals ("471/200") and
    ints. Binary floats are never produced.
    """
    if isinstance(text, (QuadraticFieldNumber, Fraction)):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    token = str(text).strip()
    if token in FIELD_TOKENS:
        return FIELD_TOKENS[token]
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InvalidArgumentError(
            f"parameter '{text}' is neither an exact decimal/rational nor one of {sorted(FIELD_TOKENS)}"
        )


def to_fraction(value) -> Fraction:
    """Exact rational for ints, Fractions, floats and rational field numbers; 256-bit approximation otherwise."""
    if isinstance(value, QuadraticFieldNumber):
        return value.approximate_fraction()
    return Fraction(value)


def format_exact(value) -> str:
    """Render an exact value as p/q, or as p/q + p/q*sqrt5 for irrational field numbers."""
    if isinstance(value, QuadraticFieldNumber) and not value.is_rational:
        return f"{_ratio(value.a)}+{_ratio(value.b)}*sqrt5"
    return _ratio(to_fraction(value))


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def render_significant(value, digits: int = 15) -> str:
    """Round `value` half-even to `digits` significant digits and print it positionally."""
    if digits < 1:
        raise InvalidArgumentError(f"precision must be at least 1, got {digits}")
    value = to_fraction(value)
    if value == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    sign = "-" if value < 0 else ""
    value = abs(value)

    exponent = len(str(value.numerator)) - len(str(value.denominator))
    if value < Fraction(10) ** exponent:
        exponent -= 1
    scaled = round(value * Fraction(10) ** (digits - 1 - exponent))
    if scaled == 10 ** digits:
        scaled //= 10
        exponent += 1

    text = str(scaled)
    if exponent >= digits - 1:
        rendered = text + "0" * (exponent - digits + 1)
    elif exponent >= 0:
        rendered = text[:exponent + 1] + "." + text[exponent + 1:]
    else:
        rendered = "0." + "0" * (-exponent - 1) + text
    return sign + rendered
