"""Exact higher-order (iterated exponential) Bell numbers."""
from higher_bell import bell_numbers, combinatorics, polynomial


__version__ = '0.1.0'


def clear_caches() -> None:
    """Empty every memo table (Stirling, Bernoulli, Bell rows, Bell polynomials)."""
    polynomial.clear_caches()
    bell_numbers.clear_caches()
    combinatorics.clear_caches()
