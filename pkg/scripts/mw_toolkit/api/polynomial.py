"""
Bivariate Polynomials with Exact Rational Coefficients

Coefficient tables t[i, j] for polynomials in x and y, as produced by the
Tutte and permutation Tutte routines. Values are immutable; zero
coefficients are never stored.
"""
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[int, int]


class BivariatePolynomial:
    """Polynomial sum of c * x^i * y^j with Fraction coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coefficients: Mapping[Monomial, object] = None):
        terms: Dict[Monomial, Fraction] = {}
        for (i, j), coefficient in (coefficients or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial ({i}, {j})")
            value = Fraction(coefficient)
            if value != 0:
                terms[(int(i), int(j))] = value
        self._terms = terms
        self._hash = None

    # --- constructors ---

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient=1) -> "BivariatePolynomial":
        return cls({(i, j): coefficient})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls.monomial(0, 1)

    @classmethod
    def from_counts(cls, counts: Mapping[Monomial, int], denominator: int = 1) -> "BivariatePolynomial":
        """Build sum count * x^i y^j / denominator from integer counts."""
        return cls({key: Fraction(count, denominator) for key, count in counts.items()})

    @classmethod
    def from_corank_nullity(cls, counts: Mapping[Monomial, int]) -> "BivariatePolynomial":
        """Expand sum count * (x-1)^a (y-1)^b into the monomial basis with integer arithmetic."""
        terms: Dict[Monomial, int] = {}
        for (a, b), count in counts.items():
            for i in range(a + 1):
                x_part = count * comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    terms[(i, j)] = terms.get((i, j), 0) + x_part * comb(b, j) * (-1) ** (b - j)
        return cls(terms)

    # --- accessors ---

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=_graded_lex_key))

    def is_zero(self) -> bool:
        return not self._terms

    def total(self) -> Fraction:
        """Sum of all coefficients, i.e. the value at (1, 1)."""
        return sum(self._terms.values(), Fraction(0))

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def has_integer_coefficients(self) -> bool:
        return all(value.denominator == 1 for value in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value in self._terms.values())

    # --- ring operations ---

    def __add__(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = _constant(other)
            if other is None:
                return NotImplemented
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, 0) + value
        return BivariatePolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = _constant(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = _constant(other)
            if other is None:
                return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivariatePolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BivariatePolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor) -> "BivariatePolynomial":
        return BivariatePolynomial({key: value * factor for key, value in self._terms.items()})

    def transpose(self) -> "BivariatePolynomial":
        """Swap the roles of x and y."""
        return BivariatePolynomial({(j, i): value for (i, j), value in self._terms.items()})

    def evaluate(self, x, y):
        """
        Exact evaluation at (x, y).

        Works for any exact number type closed under + and * (Fraction,
        QuadraticFieldNumber); 0^0 is 1.
        """
        total = 0
        x_powers = _powers(x, self.x_degree)
        y_powers = _powers(y, self.y_degree)
        for (i, j), value in self._terms.items():
            total = total + value * x_powers[i] * y_powers[j]
        return total

    __call__ = evaluate

    # --- comparison and rendering ---

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = _constant(other)
            if other is None:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BivariatePolynomial({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), value in self.items():
            magnitude = abs(value)
            monomial = _monomial_text(i, j)
            if not monomial:
                text = _coefficient_text(magnitude)
            elif magnitude == 1:
                text = monomial
            else:
                text = f"{_coefficient_text(magnitude)}*{monomial}"
            if not pieces:
                pieces.append(text if value > 0 else f"-{text}")
            else:
                pieces.append(f"{'+' if value > 0 else '-'} {text}")
        return " ".join(pieces)


def poly_add(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    return p + q


def poly_mul(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    return p * q


def poly_eval(p: BivariatePolynomial, x, y):
    return p.evaluate(x, y)


def poly_product(factors: Iterable[BivariatePolynomial]) -> BivariatePolynomial:
    result = BivariatePolynomial.one()
    for factor in factors:
        result = result * factor
    return result


def _constant(value):
    if isinstance(value, (int, Fraction)):
        return BivariatePolynomial({(0, 0): value})
    return None


def _powers(base, degree: int) -> list:
    powers = [1]
    for _ in range(degree):
        powers.append(powers[-1] * base)
    return powers


def _graded_lex_key(item):
    (i, j), _ = item
    return (-(i + j), -i)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _coefficient_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
