"""The invariant suite behind `bell selfcheck`.

Checks run in registration order and stop at the first failure.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Callable

from higher_bell.bell_numbers import (
    bell_first_order,
    bell_table,
    bell_via_recursion,
    egf_hierarchy,
)
from higher_bell.combinatorics import (
    bernoulli,
    binomial,
    count_partitions_by_blocks,
    faulhaber_polynomial,
    power_sum_oracle,
    stirling2,
)
from higher_bell.errors import VerificationError
from higher_bell.polynomial import (
    asymptotic_report,
    bell_polynomial,
    construct_bell_polynomial,
    difference_polynomial,
    interpolate_bell_polynomial,
    verify_lemma,
    verify_theorem,
)


REFERENCE_TABLE = {
    1: (1, 2, 5, 15, 52, 203, 877, 4140),
    2: (1, 3, 12, 60, 358, 2471, 19302, 167894),
    3: (1, 4, 22, 154, 1304, 12915, 146115, 1855570),
    4: (1, 5, 35, 315, 3455, 44590, 660665, 11035095),
    5: (1, 6, 51, 561, 7556, 120196, 2201856, 45592666),
}
REFERENCE_COMPARISON = {
    10**2: (15251, 15000),
    10**5: (15000250001, 15000000000),
    10**8: (15000000250000001, 15000000000000000),
}

CROSS_METHOD_N, CROSS_METHOD_M = 12, 6
STIRLING_N = 12
BERNOULLI_K = 20
FAULHABER_R, FAULHABER_M = 12, 200
POLYNOMIAL_N = 10
VALUES_N, VALUES_M = 8, 10

logger = logging.getLogger(__name__)

INVARIANTS: list[tuple[str, Callable[[], None]]] = []


def invariant(name: str) -> Callable[[Callable[[], None]], Callable[[], None]]:
    def wrapper(func: Callable[[], None]) -> Callable[[], None]:
        INVARIANTS.append((name, func))
        return func

    return wrapper


def expect(condition: bool, detail: str) -> None:
    if not condition:
        raise VerificationError('check', detail)


@invariant('cross-method equivalence')
def check_cross_method() -> None:
    by_egf = bell_table(CROSS_METHOD_N, CROSS_METHOD_M, 'egf')
    by_recursion = bell_table(CROSS_METHOD_N, CROSS_METHOD_M, 'recursion')
    for m in range(CROSS_METHOD_M + 1):
        for n in range(1, CROSS_METHOD_N + 1):
            egf, recursion = by_egf[m][n], by_recursion[m][n]
            expect(egf == recursion, f'B_{n}^({m}): egf {egf}, recursion {recursion}')


@invariant('row and column borders')
def check_borders() -> None:
    for m in range(CROSS_METHOD_M + 1):
        expect(bell_via_recursion(0, m) == 1, f'B_0^({m}) != 1')
        expect(bell_via_recursion(1, m) == 1, f'B_1^({m}) != 1')
    for n in range(CROSS_METHOD_N + 1):
        expect(bell_via_recursion(n, 0) == 1, f'B_{n}^(0) != 1')


@invariant('integrality of iterate series')
def check_integrality() -> None:
    for m, series in enumerate(egf_hierarchy(CROSS_METHOD_N, CROSS_METHOD_M)):
        expect(series.coeffs[0] == 1, f'E_{m}(0) = {series.coeffs[0]}')
        expect(series.is_integral(), f'n! a_n not integral in E_{m}')


@invariant('monotonicity in m')
def check_monotonicity() -> None:
    for m in range(1, CROSS_METHOD_M + 1):
        for n in range(2, CROSS_METHOD_N + 1):
            expect(bell_via_recursion(n, m) > bell_via_recursion(n, m - 1), f'B_{n}^({m}) <= B_{n}^({m - 1})')


@invariant('first-difference identity')
def check_first_difference() -> None:
    for m in range(1, CROSS_METHOD_M + 1):
        for n in range(2, CROSS_METHOD_N + 1):
            difference = bell_via_recursion(n, m) - bell_via_recursion(n, m - 1)
            expected = sum(bell_via_recursion(k, m - 1) * stirling2(n, k) for k in range(1, n))
            expect(difference == expected, f'n={n}, m={m}: {difference} != {expected}')


@invariant('first-order Bell numbers')
def check_first_order() -> None:
    for n in range(1, CROSS_METHOD_N + 1):
        expect(bell_first_order(n) == bell_via_recursion(n, 1), f'B_{n}')


@invariant('Stirling numbers match set-partition enumeration')
def check_stirling_enumeration() -> None:
    for n in range(STIRLING_N + 1):
        counts = count_partitions_by_blocks(n)
        for k in range(n + 1):
            expect(stirling2(n, k) == counts[k], f'S({n},{k}) = {stirling2(n, k)}, enumeration {counts[k]}')


@invariant('S(n, n-1) = C(n, 2)')
def check_stirling_subdiagonal() -> None:
    for n in range(2, STIRLING_N + 1):
        expect(stirling2(n, n - 1) == binomial(n, 2), f'n={n}')


@invariant('Bernoulli recurrence and odd vanishing')
def check_bernoulli() -> None:
    for k in range(1, BERNOULLI_K + 1):
        total = sum(binomial(k + 1, j) * bernoulli(j) for j in range(k + 1))
        expect(total == 0, f'k={k}: recurrence sum {total}')
        if k >= 3 and k % 2:
            expect(bernoulli(k) == 0, f'b_{k} = {bernoulli(k)}')


@invariant('Faulhaber polynomials match power sums')
def check_faulhaber_values() -> None:
    for r in range(FAULHABER_R + 1):
        poly = faulhaber_polynomial(r)
        for m in range(FAULHABER_M + 1):
            expect(poly.evaluate(m) == power_sum_oracle(r, m), f'r={r}, m={m}')


@invariant('Faulhaber polynomial shape')
def check_faulhaber_shape() -> None:
    for r in range(FAULHABER_R + 1):
        poly = faulhaber_polynomial(r)
        expect(poly.degree == r + 1, f'r={r}: degree {poly.degree}')
        expect(poly.coefficient(0) == 0, f'r={r}: constant term {poly.coefficient(0)}')
        expect(poly.leading == Fraction(1, r + 1), f'r={r}: leading {poly.leading}')


@invariant('polynomial lemma')
def check_lemma() -> None:
    for n in range(1, POLYNOMIAL_N + 1):
        verify_lemma(n)


@invariant('dual construction')
def check_dual_construction() -> None:
    for n in range(1, POLYNOMIAL_N + 1):
        constructed, interpolated = construct_bell_polynomial(n), interpolate_bell_polynomial(n)
        expect(constructed.poly == interpolated.poly, f'n={n}')


@invariant('asymptotic theorem: leading coefficient')
def check_theorem() -> None:
    for n in range(1, POLYNOMIAL_N + 1):
        verify_theorem(n)


@invariant('polynomial values match the recursion')
def check_polynomial_values() -> None:
    for n in range(1, VALUES_N + 1):
        bell = bell_polynomial(n)
        for m in range(VALUES_M + 1):
            expect(bell.evaluate(m) == bell_via_recursion(n, m), f'B_{n}^({m})')


@invariant('ratio convergence')
def check_ratio_convergence() -> None:
    excesses = [asymptotic_report(3, 10**power).ratio - 1 for power in range(1, 5)]
    expect(all(excess > 0 for excess in excesses), f'ratios below 1: {excesses}')
    expect(all(a > b for a, b in zip(excesses, excesses[1:])), f'not strictly decreasing: {excesses}')
    expect(excesses[-1] <= Fraction(17, 100000), f'|ratio - 1| at m=10^4 is {excesses[-1]}')


@invariant('telescoping identity')
def check_telescoping() -> None:
    lower = [bell_polynomial(k) for k in range(1, POLYNOMIAL_N)]
    for n in range(2, POLYNOMIAL_N + 1):
        poly = bell_polynomial(n).poly
        difference = difference_polynomial(n, lower[: n - 1])
        expect(poly - poly.shift(-1) == difference.poly, f'n={n}')


@invariant('reference table of B_n^(m)')
def check_reference_table() -> None:
    for m, row in REFERENCE_TABLE.items():
        for n, expected in enumerate(row, start=1):
            expect(bell_via_recursion(n, m) == expected, f'B_{n}^({m}) != {expected}')


@invariant('reference comparison for B_3^(m)')
def check_reference_comparison() -> None:
    for m, (exact, leading) in REFERENCE_COMPARISON.items():
        report = asymptotic_report(3, m)
        expect(report.exact == exact and report.leading == leading, f'm={m}: {report}')


@dataclass
class SelfcheckReport:
    passed: list[str] = field(default_factory=list)
    failed: str | None = None
    detail: str = ''

    @property
    def ok(self) -> bool:
        return self.failed is None


def run_selfcheck() -> SelfcheckReport:
    report = SelfcheckReport()
    for step, (name, check) in enumerate(INVARIANTS, start=1):
        try:
            check()

        except VerificationError as error:
            logger.error(f'\t\t\tInvariant failed: {name}, error:\n{error}')
            report.failed, report.detail = name, str(error)
            return report

        logger.info(f'=== CHECK-{step}: {name} ok.')
        report.passed.append(name)

    return report
