"""B_n^(m) as a polynomial in m of degree n - 1 with rational coefficients.

Two independent constructions are provided: Newton interpolation over
m = 0..n-1 with a held-out check at m = n, and the constructive route
difference -> telescoping -> Faulhaber, built bottom-up from B_1^(m) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
import logging
from typing import Sequence

from higher_bell.bell_numbers import bell_via_recursion
from higher_bell.combinatorics import binomial, factorial, faulhaber_polynomial, require_natural, stirling2
from higher_bell.errors import InvalidArgumentError, VerificationError
from higher_bell.rational_polynomial import RationalPolynomial, poly_eval, poly_shift


__all__ = [
    'AsymptoticReport',
    'BellPolynomial',
    'DifferencePolynomial',
    'RationalPolynomial',
    'asymptotic_report',
    'bell_polynomial',
    'construct_bell_polynomial',
    'difference_polynomial',
    'interpolate_bell_polynomial',
    'leading_coefficient',
    'poly_eval',
    'poly_shift',
    'theorem_leading_coefficient',
    'verify_lemma',
    'verify_theorem',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BellPolynomial:
    """c_0 + c_1 m + ... + c_{n-1} m^(n-1), equal to B_n^(m) at every natural m."""

    n: int
    poly: RationalPolynomial

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs

    def evaluate(self, m: int) -> int:
        value = self.poly.evaluate(m)
        if value.denominator != 1:
            raise VerificationError('integer values', f'B_{self.n}^({m}) evaluated to {value}')

        return value.numerator


@dataclass(frozen=True)
class DifferencePolynomial:
    """d_0 + d_1 m + ... + d_{n-2} m^(n-2), equal to B_n^(m) - B_n^(m-1)."""

    n: int
    poly: RationalPolynomial


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    m: int
    exact: int
    leading: Fraction
    ratio: Fraction


def _constant_one(n: int) -> BellPolynomial:
    return BellPolynomial(n, RationalPolynomial.constant(1))


def theorem_leading_coefficient(n: int) -> Fraction:
    """Closed form n!/2^(n-1)."""
    return Fraction(factorial(n), 2 ** (n - 1))


def interpolate_bell_polynomial(n: int) -> BellPolynomial:
    """Fit B_n^(m) over m = 0..n-1 by Newton divided differences, then check m = n."""
    require_natural('n', n)
    if n == 0:
        # B_0^(m) = 1, kept as a total extension outside the n >= 1 statement
        return _constant_one(0)

    nodes = list(range(n))
    table = [Fraction(bell_via_recursion(n, m)) for m in nodes]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - j])

    poly = RationalPolynomial.constant(table[-1])
    for i in range(n - 2, -1, -1):
        poly = poly * RationalPolynomial((Fraction(-nodes[i]), Fraction(1))) + table[i]

    expected = bell_via_recursion(n, n)
    held_out = poly.evaluate(n)
    if held_out != expected:
        raise VerificationError(
            'held-out interpolation point', f'B_{n}^({n}) = {expected}, polynomial gives {held_out}'
        )

    logger.debug(f'Interpolated B_{n}^(m) = {poly}')
    return BellPolynomial(n, poly)


def difference_polynomial(n: int, lower: Sequence[BellPolynomial]) -> DifferencePolynomial:
    """sum_{k=1}^{n-1} S(n, k) B_k^(m-1), re-expanded in m."""
    require_natural('n', n)
    if n < 2:
        raise InvalidArgumentError('difference_polynomial needs n >= 2')

    if len(lower) < n - 1 or any(lower[k - 1].n != k for k in range(1, n)):
        raise InvalidArgumentError(f'difference_polynomial({n}) needs Bell polynomials for 1..{n - 1}')

    poly = RationalPolynomial()
    for k in range(1, n):
        poly = poly + lower[k - 1].poly.shift(-1) * stirling2(n, k)

    if poly.degree != n - 2 or poly.leading <= 0:
        raise VerificationError('difference polynomial shape', f'n={n}: {poly}')

    return DifferencePolynomial(n, poly)


def construct_bell_polynomial(n: int) -> BellPolynomial:
    """B_n^(m) = 1 + sum_r d_r P_r(m), level by level, checked against the interpolation route."""
    require_natural('n', n)
    if n == 0:
        return _constant_one(0)

    levels = [_constant_one(1)]
    for level in range(2, n + 1):
        difference = difference_polynomial(level, levels)
        poly = RationalPolynomial.constant(1)
        for r, d in enumerate(difference.poly.coeffs):
            poly = poly + faulhaber_polynomial(r) * d

        levels.append(BellPolynomial(level, poly))

    constructed = levels[-1]
    interpolated = interpolate_bell_polynomial(n)
    if constructed.poly != interpolated.poly:
        raise VerificationError(
            'dual construction',
            f'n={n}: constructed {constructed.poly} but interpolated {interpolated.poly}',
        )

    return constructed


@cache
def bell_polynomial(n: int) -> BellPolynomial:
    return construct_bell_polynomial(n)


def leading_coefficient(n: int) -> Fraction:
    """c_{n-1}^(n), iterated from c_0^(1) = 1 along the proof of the asymptotic theorem."""
    require_natural('n', n)
    if n < 1:
        raise InvalidArgumentError('leading_coefficient needs n >= 1')

    c = Fraction(1)
    for level in range(2, n + 1):
        # top coefficient of the difference: c^(level-1) times S(level, level-1) = C(level, 2)
        d = c * binomial(level, 2)
        # telescoping against the Faulhaber leading term m^(r+1)/(r+1), r = level - 2
        c = d / (level - 1)

    return c


def asymptotic_report(n: int, m: int) -> AsymptoticReport:
    require_natural('n', n)
    require_natural('m', m)
    if n < 1 or m < 1:
        raise InvalidArgumentError('asymptotic_report needs n >= 1 and m >= 1')

    exact = bell_polynomial(n).evaluate(m)
    leading = theorem_leading_coefficient(n) * m ** (n - 1)
    return AsymptoticReport(n=n, m=m, exact=exact, leading=leading, ratio=exact / leading)


def verify_lemma(n: int) -> BellPolynomial:
    """Degree n-1, rational coefficients, c_0 = 1 and the held-out point (checked while interpolating)."""
    bell = interpolate_bell_polynomial(n)
    if bell.poly.degree != n - 1:
        raise VerificationError('lemma: degree', f'n={n}: degree {bell.poly.degree}')

    if bell.poly.coefficient(0) != 1:
        raise VerificationError('lemma: constant term', f'n={n}: c_0 = {bell.poly.coefficient(0)}')

    if not all(isinstance(c, Fraction) for c in bell.coefficients):
        raise VerificationError('lemma: rational coefficients', f'n={n}: {bell.coefficients}')

    return bell


def verify_theorem(n: int) -> Fraction:
    """Top coefficient of the constructed polynomial == proof recurrence == n!/2^(n-1)."""
    top = bell_polynomial(n).poly.leading
    iterated = leading_coefficient(n)
    closed = theorem_leading_coefficient(n)
    if not top == iterated == closed:
        raise VerificationError(
            'theorem: leading coefficient',
            f'n={n}: polynomial {top}, recurrence {iterated}, closed form {closed}',
        )

    return top


def clear_caches() -> None:
    bell_polynomial.cache_clear()
