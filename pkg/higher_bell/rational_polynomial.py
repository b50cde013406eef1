"""Dense univariate polynomials in m with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union


Scalar = Union[int, Fraction]


def _normalized(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    values = [Fraction(coefficient) for coefficient in coeffs]
    while values and values[-1] == 0:
        values.pop()

    return tuple(values)


@dataclass(frozen=True)
class RationalPolynomial:
    """coeffs[j] is the coefficient of m**j; the zero polynomial stores no coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'coeffs', _normalized(self.coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> RationalPolynomial:
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, power: int, value: Scalar = 1) -> RationalPolynomial:
        return cls((Fraction(0),) * power + (Fraction(value),))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def evaluate(self, m: Scalar) -> Fraction:
        """Horner evaluation."""
        result = Fraction(0)
        for coefficient in reversed(self.coeffs):
            result = result * m + coefficient

        return result

    __call__ = evaluate

    def shift(self, delta: Scalar) -> RationalPolynomial:
        """Return q with q(m) == self(m + delta)."""
        shifted = [Fraction(0)] * len(self.coeffs)
        for power, coefficient in enumerate(self.coeffs):
            for j in range(power + 1):
                shifted[j] += coefficient * comb(power, j) * Fraction(delta) ** (power - j)

        return RationalPolynomial(tuple(shifted))

    def __add__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        other = _as_polynomial(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-coefficient for coefficient in self.coeffs))

    def __sub__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: Scalar) -> RationalPolynomial:
        return _as_polynomial(other) - self

    def __mul__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(tuple(coefficient * other for coefficient in self.coeffs))

        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()

        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, left in enumerate(self.coeffs):
            for j, right in enumerate(other.coeffs):
                product[i + j] += left * right

        return RationalPolynomial(tuple(product))

    __rmul__ = __mul__

    def format_coefficients(self) -> list[str]:
        """Coefficients c_0, c_1, ... as reduced 'p/q' strings ('p' when q == 1)."""
        return [str(coefficient) for coefficient in self.coeffs] or ['0']

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'

        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coeffs[power]
            if coefficient == 0:
                continue
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            if magnitude == 1 and power:
                factor = ''
            elif magnitude.denominator != 1:
                factor = f'({magnitude})'
            else:
                factor = str(magnitude)
            variable = '' if power == 0 else 'm' if power == 1 else f'm^{power}'
            terms.append((sign, f'{factor}{variable}'))

        first_sign, first_term = terms[0]
        text = ('-' if first_sign == '-' else '') + first_term
        for sign, term in terms[1:]:
            text += f' {sign} {term}'

        return text


def _as_polynomial(value: RationalPolynomial | Scalar) -> RationalPolynomial:
    return value if isinstance(value, RationalPolynomial) else RationalPolynomial.constant(value)


def poly_eval(p: RationalPolynomial, m: Scalar) -> Fraction:
    return p.evaluate(m)


def poly_shift(p: RationalPolynomial, delta: Scalar) -> RationalPolynomial:
    return p.shift(delta)
