"""Rational and Eisenstein primality, prime splitting and factorization."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as igcd, isqrt, prod

import numpy as np

from .core import ONE, UNITS, EInt, IntLike, canonicalize, exact_div, gcd

__all__ = [
    "DETERMINISTIC",
    "PROBABILISTIC",
    "Primality",
    "FactorizationError",
    "rational_is_prime",
    "rational_factor",
    "SplitClass",
    "split_prime",
    "sqrt_mod",
    "is_prime",
    "Factorization",
    "factor",
    "SmallestPrimeFactorSieve",
]

DETERMINISTIC = "deterministic"
PROBABILISTIC = "probabilistic"

#: Error bound exponent for probabilistic answers (error <= 2**-bits).
DEFAULT_CONFIDENCE_BITS = 128

# Miller-Rabin with the first 13 prime bases is exact below this bound.
DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_RHO_BUDGET = 2_000_000


@dataclass(frozen=True)
class Primality:
    """A primality answer carrying how it was obtained.

    Truthiness is the answer itself, so it can be used directly in ``if``.
    """

    value: bool
    confidence: str = DETERMINISTIC

    def __bool__(self):
        return self.value

    @property
    def certain(self) -> bool:
        return self.confidence == DETERMINISTIC


class FactorizationError(RuntimeError):
    """A cofactor resisted factoring within the configured effort budget."""


def _small_primes(limit: int) -> list[int]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


_SMALL_PRIMES = _small_primes(1000)


def _strong_probable_prime(n: int, base: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def rational_is_prime(n: int, bits: int | None = None) -> Primality:
    """Miller-Rabin primality for ``n >= 1``.

    Exact below :data:`DETERMINISTIC_LIMIT`.  Above it, random bases are
    used until the error bound ``4**-rounds`` is at most ``2**-bits``.
    """
    if n < 2:
        return Primality(False)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return Primality(n == p)
    if n < 1000 * 1000:
        return Primality(True)
    if n < DETERMINISTIC_LIMIT:
        return Primality(all(_strong_probable_prime(n, b) for b in _MR_BASES))
    if bits is None:
        bits = DEFAULT_CONFIDENCE_BITS
    if not all(_strong_probable_prime(n, b) for b in _MR_BASES):
        return Primality(False)
    rounds = -(-bits // 2)
    for _ in range(rounds):
        if not _strong_probable_prime(n, random.randrange(2, n - 1)):
            return Primality(False)
    return Primality(True, PROBABILISTIC)


def _brent_rho(n: int, budget: int) -> int | None:
    """Find a nontrivial factor of composite ``n`` or give up after ``budget`` steps."""
    if n % 2 == 0:
        return 2
    spent = 0
    while spent < budget:
        y = random.randrange(1, n)
        c = random.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = igcd(q, n)
                k += m
            spent += r
            r *= 2
            if spent >= budget:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = igcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _factor_with_confidence(
    n: int, budget: int = DEFAULT_RHO_BUDGET
) -> tuple[dict[int, int], bool]:
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    found: dict[int, int] = {}
    certain = True
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        pr = rational_is_prime(m)
        if pr:
            found[m] = found.get(m, 0) + 1
            certain = certain and pr.certain
            continue
        d = _perfect_power_root(m) or _trial_divide_one(m)
        if d is None:
            d = _brent_rho(m, budget)
        if d is None:
            raise FactorizationError(
                f"could not split composite {m} within a budget of {budget} rho steps"
            )
        stack.extend((d, m // d))
    return dict(sorted(found.items())), certain


def _iroot(n: int, k: int) -> int:
    """Largest r with r**k <= n."""
    if n < 2:
        return n
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


def _perfect_power_root(m: int) -> int | None:
    # rho cannot split prime powers; find m = r**k directly
    for k in _SMALL_PRIMES:
        if k > m.bit_length():
            break
        r = _iroot(m, k)
        if r > 1 and r**k == m:
            return r
    return None


def _trial_divide_one(m: int) -> int | None:
    limit = min(TRIAL_DIVISION_LIMIT, isqrt(m))
    if limit <= 1000:
        # small primes were already stripped
        return None
    for d in range(1001, limit + 1, 2):
        if m % d == 0:
            return d
    return None


def rational_factor(n: int, budget: int = DEFAULT_RHO_BUDGET) -> list[tuple[int, int]]:
    """Complete factorization of ``n >= 1`` as sorted ``(prime, exponent)`` pairs."""
    return list(_factor_with_confidence(n, budget)[0].items())


class SmallestPrimeFactorSieve:
    """Read-only smallest-prime-factor table for fast factoring up to ``limit``."""

    def __init__(self, limit: int) -> None:
        limit = max(int(limit), 2)
        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        idx = np.flatnonzero(spf == 0)
        spf[idx] = idx
        spf.flags.writeable = False
        self.limit = limit
        self._spf = spf.tolist()

    def factor(self, n: int) -> dict[int, int]:
        if not 1 <= n <= self.limit:
            raise ValueError(f"{n} is outside the sieve range 1..{self.limit}")
        spf = self._spf
        out: dict[int, int] = {}
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return out


def sqrt_mod(n: int, p: int) -> int | None:
    """Square root of ``n`` modulo an odd prime ``p`` (Tonelli-Shanks)."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True)
class SplitClass:
    """How a rational prime decomposes in Z[w]."""

    p: int
    tag: str  # "ramified" | "split" | "inert"
    primes: tuple[EInt, ...]


@lru_cache(maxsize=4096)
def split_prime(p: int) -> SplitClass:
    """Decompose the rational prime ``p``.

    For ``p == 1 (mod 3)`` a root ``x`` of ``x^2 + x + 1`` mod ``p`` gives the
    prime ``gcd(p, x - w)``; the other prime is its conjugate.
    """
    if p < 2 or not rational_is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 3:
        return SplitClass(3, "ramified", (EInt(2, 1),))
    if p % 3 == 2:
        return SplitClass(p, "inert", (EInt(p, 0),))
    r = sqrt_mod(-3, p)
    x = (r - 1) * pow(2, -1, p) % p
    pi = gcd(EInt(p, 0), EInt(x, -1))
    pi_bar = canonicalize(pi.conjugate())[1]
    first, second = sorted((pi, pi_bar), key=EInt.sort_key)
    return SplitClass(p, "split", (first, second))


def is_prime(x: IntLike, bits: int | None = None) -> Primality:
    """Eisenstein primality.

    ``x`` is prime iff its norm is a rational prime, or its norm is ``q**2``
    for a rational prime ``q == 2 (mod 3)`` and ``x`` is an associate of ``q``.
    """
    x = EInt.coerce(x)
    n = x.norm()
    if n <= 1:
        return Primality(False)
    pr = rational_is_prime(n, bits)
    if pr:
        return pr
    q = isqrt(n)
    if q * q != n or q % 3 != 2:
        return Primality(False)
    if canonicalize(x)[1] != EInt(q, 0):
        return Primality(False)
    return rational_is_prime(q, bits)


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(p**e for p, e in factors)`` with first-sextant primes."""

    unit: EInt
    factors: tuple[tuple[EInt, int], ...]
    confidence: str = DETERMINISTIC

    def value(self) -> EInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _strip(x: EInt, p: EInt) -> tuple[EInt, int]:
    e = 0
    while True:
        q = exact_div(x, p)
        if q is None:
            return x, e
        x = q
        e += 1


def factor(
    x: IntLike,
    *,
    sieve: SmallestPrimeFactorSieve | None = None,
    budget: int = DEFAULT_RHO_BUDGET,
) -> Factorization:
    """Factor a nonzero Eisenstein integer into canonical primes.

    The norm is factored over Z, each rational prime is split, and exponents
    are found by repeated exact division.  Pass ``sieve`` to factor norms by
    table lookup.
    """
    x = EInt.coerce(x)
    n = x.norm()
    if n == 0:
        raise ValueError("cannot factor zero")
    if sieve is not None and n <= sieve.limit:
        norm_factors, certain = sieve.factor(n), True
    else:
        norm_factors, certain = _factor_with_confidence(n, budget)
    factors = []
    rest = x
    for p, e in norm_factors.items():
        if p == 3 or p % 3 == 2:
            pi = split_prime(p).primes[0]
            rest, k = _strip(rest, pi)
            factors.append((pi, k))
            continue
        if rest.norm() == p ** e and e == 1:
            # Rest has prime norm: it is itself prime; skip splitting p.
            u, pi = canonicalize(rest)
            factors.append((pi, 1))
            rest = UNITS[(-UNITS.index(u)) % 6]
            continue
        for pi in split_prime(p).primes:
            rest, k = _strip(rest, pi)
            if k:
                factors.append((pi, k))
    if rest.norm() != 1:
        raise AssertionError(f"factorization of {x} left a non-unit cofactor {rest}")
    factors.sort(key=lambda pe: pe[0].sort_key())
    return Factorization(
        unit=rest,
        factors=tuple(factors),
        confidence=DETERMINISTIC if certain else PROBABILISTIC,
    )
