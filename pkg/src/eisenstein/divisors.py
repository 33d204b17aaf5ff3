"""The star map and the complex sum-of-divisors function."""

from __future__ import annotations

from itertools import product
from math import prod

from .core import ONE, ZERO, EInt, IntLike
from .primes import SmallestPrimeFactorSieve, factor

__all__ = ["star", "sigma", "prime_power_sigma", "canonical_divisors", "sigma_oracle"]

ORACLE_DIVISOR_LIMIT = 100_000


def star(x: IntLike, *, sieve: SmallestPrimeFactorSieve | None = None) -> EInt:
    """Replace every prime of ``x`` by its first-sextant associate.

    The unit of the factorization is dropped, so units map to 1.
    """
    out = ONE
    for p, e in factor(x, sieve=sieve):
        out = out * p**e
    return out


def prime_power_sigma(p: EInt, e: int) -> EInt:
    """``1 + p + ... + p**e`` for a canonical prime ``p``."""
    total = ONE
    term = ONE
    for _ in range(e):
        term = term * p
        total = total + term
    return total


def sigma(x: IntLike, *, sieve: SmallestPrimeFactorSieve | None = None) -> EInt:
    """Sum of the canonical divisors of ``x``, via the product of geometric sums."""
    out = ONE
    for p, e in factor(x, sieve=sieve):
        out = out * prime_power_sigma(p, e)
    return out


def canonical_divisors(x: IntLike, limit: int = ORACLE_DIVISOR_LIMIT) -> list[EInt]:
    """Every product of canonical prime powers dividing ``x``.

    Raises ``OverflowError`` if there would be more than ``limit`` divisors.
    """
    fac = factor(x)
    count = prod(e + 1 for _, e in fac)
    if count > limit:
        raise OverflowError(f"{x} has {count} canonical divisors, above the limit {limit}")
    powers = [[p**i for i in range(e + 1)] for p, e in fac]
    return [prod(combo, start=ONE) for combo in product(*powers)]


def sigma_oracle(x: IntLike, limit: int = ORACLE_DIVISOR_LIMIT) -> EInt:
    """Direct summation over :func:`canonical_divisors`; a cross-check for :func:`sigma`."""
    return sum(canonical_divisors(x, limit), ZERO)
