"""Higher-order Bell numbers B_n^(m) by two independent routes.

E_0(x) = exp(x), E_{m+1}(x) = exp(E_m(x) - 1) and B_n^(m) = n! [x^n] E_m(x).
The EGF route iterates truncated series; the recursion route uses
B_n^(m) = sum_{k=1}^{n} B_k^(m-1) S(n, k) with B_n^(0) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
import threading

from higher_bell.combinatorics import factorial, require_natural, stirling_row
from higher_bell.errors import InvalidArgumentError, VerificationError
from higher_bell.settings import settings


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedEGF:
    """a_0 + a_1 x + ... + a_N x^N, the degree-N truncation of a power series."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidArgumentError('a truncated series needs at least the constant term')
        object.__setattr__(self, 'coeffs', tuple(Fraction(a) for a in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def exponential(cls, order: int) -> TruncatedEGF:
        """Truncation of E_0 = exp(x)."""
        require_natural('order', order)
        return cls(tuple(Fraction(1, factorial(j)) for j in range(order + 1)))

    @classmethod
    def one(cls, order: int) -> TruncatedEGF:
        require_natural('order', order)
        return cls((Fraction(1),) + (Fraction(0),) * order)

    def is_integral(self) -> bool:
        """n! a_n is an integer for every n <= N."""
        return all(factorial(n) % a.denominator == 0 for n, a in enumerate(self.coeffs))

    def bell_numbers(self) -> list[int]:
        """n! a_n for n = 0..N."""
        if not self.is_integral():
            raise VerificationError('integrality', f'n! a_n is not an integer in {self.coeffs}')

        return [int(a * factorial(n)) for n, a in enumerate(self.coeffs)]


def egf_iterate(series: TruncatedEGF) -> TruncatedEGF:
    """Truncation of exp(series - 1) at the same order."""
    if series.coeffs[0] != 1:
        raise InvalidArgumentError(f'constant term must be 1 for an iterate, got {series.coeffs[0]}')

    f = (Fraction(0),) + series.coeffs[1:]
    g = [Fraction(1)]
    for j in range(1, series.order + 1):
        g.append(sum((i * f[i] * g[j - i] for i in range(1, j + 1)), Fraction(0)) / j)

    return TruncatedEGF(tuple(g))


def egf_hierarchy(order: int, m_max: int) -> list[TruncatedEGF]:
    """E_0, ..., E_{m_max} truncated at `order`."""
    require_natural('m_max', m_max)
    hierarchy = [TruncatedEGF.exponential(order)]
    for _ in range(m_max):
        hierarchy.append(egf_iterate(hierarchy[-1]))

    return hierarchy


def bell_via_egf(n: int, m: int) -> int:
    require_natural('n', n)
    require_natural('m', m)
    # truncation at order n is enough: coefficients up to x^n of exp(f) only need f up to x^n
    series = TruncatedEGF.exponential(n)
    for _ in range(m):
        series = egf_iterate(series)

    return series.bell_numbers()[n]


class BellTable:
    """Rows B_0^(m), ..., B_width^(m) for m = 0, 1, ..., computed with the Stirling recursion.

    Rows up to `max_cached_m` are kept; deeper rows are produced with a rolling row and dropped.
    """

    def __init__(self, max_cached_m: int) -> None:
        self.max_cached_m = max_cached_m
        self._width = 0
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.RLock()

    @property
    def max_n(self) -> int:
        return self._width

    @property
    def max_m(self) -> int:
        return len(self._rows) - 1

    def _next_row(self, previous: tuple[int, ...]) -> tuple[int, ...]:
        row = [1]
        for n in range(1, self._width + 1):
            stirling = stirling_row(n)
            row.append(sum(previous[k] * stirling[k] for k in range(1, n + 1)))

        return tuple(row)

    def _widen(self, width: int) -> None:
        cached = len(self._rows)
        self._width = width
        self._rows = [(1,) * (width + 1)]
        while len(self._rows) < cached:
            self._rows.append(self._next_row(self._rows[-1]))
        logger.debug(f'Bell table widened to n={width}, {cached} row(s) recomputed')

    def value(self, n: int, m: int) -> int:
        with self._lock:
            if n > self._width:
                self._widen(n)

            if m < len(self._rows):
                return self._rows[m][n]

            row = self._rows[-1]
            for level in range(len(self._rows), m + 1):
                row = self._next_row(row)
                if level <= self.max_cached_m:
                    self._rows.append(row)

            return row[n]

    def clear(self) -> None:
        with self._lock:
            self._width = 0
            self._rows = [(1,)]


bell_table_memo = BellTable(settings.max_cached_m)


def bell_via_recursion(n: int, m: int) -> int:
    require_natural('n', n)
    require_natural('m', m)
    return bell_table_memo.value(n, m)


def bell_first_order(n: int) -> int:
    """B_n, the number of partitions of an n-set, as the row sum of Stirling numbers."""
    require_natural('n', n)
    if n == 0:
        raise InvalidArgumentError('bell_first_order needs n >= 1')

    return sum(stirling_row(n)[1:])


def bell_table(n_max: int, m_max: int, method: str = 'recursion') -> list[list[int]]:
    """Grid [m][n] of B_n^(m) for 0 <= n <= n_max, 0 <= m <= m_max."""
    require_natural('n_max', n_max)
    require_natural('m_max', m_max)
    if method == 'egf':
        return [series.bell_numbers() for series in egf_hierarchy(n_max, m_max)]

    if method == 'recursion':
        return [[bell_via_recursion(n, m) for n in range(n_max + 1)] for m in range(m_max + 1)]

    raise InvalidArgumentError(f'unknown method for bell_table: {method!r}')


def successive_ratio(n: int, m: int) -> Fraction:
    """B_n^(m) / B_n^(m-1), which tends to 1 as m grows with n fixed."""
    require_natural('n', n)
    if m < 1:
        raise InvalidArgumentError('successive_ratio needs m >= 1')

    return Fraction(bell_via_recursion(n, m), bell_via_recursion(n, m - 1))


def clear_caches() -> None:
    bell_table_memo.clear()
