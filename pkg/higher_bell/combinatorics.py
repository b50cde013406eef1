"""Exact building blocks: factorials, binomials, Stirling numbers of the second kind,
Bernoulli numbers and Faulhaber power-sum polynomials.

The memo tables grow on demand, are never evicted and are guarded by a lock,
so concurrent fills from several threads see one consistent triangle.
"""
from fractions import Fraction
import logging
from math import comb, factorial as math_factorial
import threading
from typing import Iterable, Iterator, TypeVar

from higher_bell.errors import InvalidArgumentError
from higher_bell.rational_polynomial import RationalPolynomial


T = TypeVar('T')

logger = logging.getLogger(__name__)


def require_natural(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidArgumentError(f'{name} must be a natural number, got {value!r}')

    return value


class StirlingTable:
    """Triangle of S(n, k) for 0 <= k <= n <= max_n."""

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    @staticmethod
    def _next_row(previous: tuple[int, ...]) -> tuple[int, ...]:
        # S(n, k) = k S(n-1, k) + S(n-1, k-1), with S(n-1, n) = 0 and S(n, 0) = 0 for n >= 1
        n = len(previous)
        return tuple(
            (k * previous[k] if k < n else 0) + (previous[k - 1] if k else 0)
            for k in range(n + 1)
        )

    def row(self, n: int) -> tuple[int, ...]:
        with self._lock:
            while len(self._rows) <= n:
                self._rows.append(self._next_row(self._rows[-1]))
                logger.debug(f'Stirling triangle grown to n={self.max_n}')

            return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if k > n:
            return 0

        return self.row(n)[k]

    def clear(self) -> None:
        with self._lock:
            self._rows = [(1,)]


class BernoulliSequence:
    """b_0, b_1, ... with b_1 = -1/2, from sum_{j=0}^{k} C(k+1, j) b_j = 0 (k >= 1)."""

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def value(self, k: int) -> Fraction:
        with self._lock:
            while len(self._values) <= k:
                index = len(self._values)
                partial = sum(comb(index + 1, j) * b for j, b in enumerate(self._values))
                self._values.append(-Fraction(partial) / (index + 1))

            return self._values[k]

    def clear(self) -> None:
        with self._lock:
            self._values = [Fraction(1)]


stirling_table = StirlingTable()
bernoulli_sequence = BernoulliSequence()


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    require_natural('n', n)
    require_natural('k', k)
    return stirling_table.value(n, k)


def stirling_row(n: int) -> tuple[int, ...]:
    """S(n, 0), ..., S(n, n)."""
    require_natural('n', n)
    return stirling_table.row(n)


def binomial(n: int, k: int) -> int:
    require_natural('n', n)
    require_natural('k', k)
    return comb(n, k)


def factorial(n: int) -> int:
    require_natural('n', n)
    return math_factorial(n)


def bernoulli(k: int) -> Fraction:
    require_natural('k', k)
    return bernoulli_sequence.value(k)


def faulhaber_polynomial(r: int) -> RationalPolynomial:
    """P_r with P_r(m) = 1**r + 2**r + ... + m**r for every natural m.

    P_r(m) = m**(r+1)/(r+1) + m**r/2 + sum_{k=2}^{r} (b_k/k) C(r, k-1) m**(r-k+1),
    the m**r/2 term being present only for r >= 1 (it is the b_1 term with its sign flipped).
    """
    require_natural('r', r)
    poly = RationalPolynomial.monomial(r + 1, Fraction(1, r + 1))
    if r >= 1:
        poly = poly + RationalPolynomial.monomial(r, Fraction(1, 2))

    for k in range(2, r + 1):
        poly = poly + RationalPolynomial.monomial(r - k + 1, bernoulli(k) / k * comb(r, k - 1))

    return poly


def power_sum_oracle(r: int, m: int) -> int:
    require_natural('r', r)
    require_natural('m', m)
    return sum(k**r for k in range(1, m + 1))


def set_partitions(elements: Iterable[T]) -> Iterator[list[list[T]]]:
    """Every partition of `elements` into nonempty blocks, each exactly once."""
    elements = list(elements)
    if not elements:
        yield []
        return

    first, rest = elements[0], elements[1:]
    for partition in set_partitions(rest):
        for index in range(len(partition)):
            yield partition[:index] + [[first] + partition[index]] + partition[index + 1:]

        yield [[first]] + partition


def count_partitions_by_blocks(n: int) -> list[int]:
    """counts[k] = number of partitions of an n-set into k blocks, by enumerating restricted growth strings."""
    require_natural('n', n)
    counts = [0] * (n + 1)

    def extend(size: int, blocks: int) -> None:
        if size == n:
            counts[blocks] += 1
            return

        # element `size` joins one of the existing blocks, each choice is a distinct partition
        for _ in range(blocks):
            extend(size + 1, blocks)

        extend(size + 1, blocks + 1)

    extend(0, 0)
    return counts


def clear_caches() -> None:
    stirling_table.clear()
    bernoulli_sequence.clear()
