"""Mersenne numbers over an Eisenstein prime and the closed forms for tau = 2 + w."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ONE, EInt, IntLike, exact_div, is_unit, sextant
from .primes import DETERMINISTIC, Primality, is_prime, rational_is_prime

__all__ = [
    "TAU",
    "MersenneRecord",
    "mersenne",
    "table1_norm",
    "table1_mersenne",
    "mersenne_sextant_class",
    "Lemma38Report",
    "check_lemma38",
    "composite_index_split",
]

#: The prime 2 + w = sqrt(3) * exp(i*pi/6); tau - 1 = 1 + w is a unit.
TAU = EInt(2, 1)


@dataclass(frozen=True)
class MersenneRecord:
    tau: EInt
    k: int
    m: EInt
    a_k: int
    prime_status: Primality

    @property
    def is_prime(self) -> bool:
        return bool(self.prime_status)


def _geometric(tau: EInt, k: int) -> EInt:
    total = ONE
    term = ONE
    for _ in range(k - 1):
        term = term * tau
        total = total + term
    return total


def mersenne(tau: IntLike, k: int, bits: int | None = None) -> MersenneRecord:
    """``M_k = 1 + tau + ... + tau**(k-1)`` together with its norm and primality."""
    tau = EInt.coerce(tau)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not is_prime(tau):
        raise ValueError(f"{tau} is not an Eisenstein prime")
    m = _geometric(tau, k)
    return MersenneRecord(tau, k, m, m.norm(), is_prime(m, bits))


# Closed-form rows by k mod 12, rewritten in the (1, w) basis.  Even k use h = 3**(k/2),
# odd k use s = 3**((k-1)/2); entries are (a, b) of M_k = a + b*w.
_TABLE1_ROWS = {
    0: lambda h: (0, 1 - h),
    1: lambda s: (s, 1 - s),
    2: lambda h: (h, 1),
    3: lambda s: (2 * s, 1 + s),
    4: lambda h: (h, 1 + h),
    5: lambda s: (s, 1 + 2 * s),
    6: lambda h: (0, 1 + h),
    7: lambda s: (-s, 1 + s),
    8: lambda h: (-h, 1),
    9: lambda s: (-2 * s, 1 - s),
    10: lambda h: (-h, 1 - h),
    11: lambda s: (-s, 1 - 2 * s),
}


def table1_norm(k: int) -> int:
    """Closed form of ``A_k = N(M_k)`` for tau = 2 + w, by residue of k mod 12."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    r = k % 12
    p3k = 3**k
    if k % 2 == 0:
        h = 3 ** (k // 2)
        return {
            0: 1 - 2 * h + p3k,
            2: 1 - h + p3k,
            4: 1 + h + p3k,
            6: 1 + 2 * h + p3k,
            8: 1 + h + p3k,
            10: 1 - h + p3k,
        }[r]
    t = 3 ** ((k + 1) // 2)
    return {
        1: 1 + p3k - t,
        3: 1 + p3k,
        5: 1 + p3k + t,
        7: 1 + p3k + t,
        9: 1 + p3k,
        11: 1 + p3k - t,
    }[r]


def table1_mersenne(k: int) -> EInt:
    """Closed form of ``M_k`` for tau = 2 + w, by residue of k mod 12."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    base = 3 ** (k // 2) if k % 2 == 0 else 3 ** ((k - 1) // 2)
    return EInt(*_TABLE1_ROWS[k % 12](base))


def mersenne_sextant_class(k: int) -> int:
    """Sextant of ``M_k`` for tau = 2 + w (6 when k = 1 mod 12, 5 when k = -1)."""
    if k < 2:
        raise ValueError(f"M_k is a unit for k = {k}; need k >= 2")
    return sextant(table1_mersenne(k))


@dataclass
class Lemma38Report:
    kmax: int
    prime_indices: list[int] = field(default_factory=list)
    counterexamples: list[int] = field(default_factory=list)
    confidence: str = DETERMINISTIC

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_lemma38(kmax: int, tau: IntLike = TAU, bits: int | None = None) -> Lemma38Report:
    """Check that ``M_k`` prime forces ``k`` prime, for every ``2 <= k <= kmax``."""
    tau = EInt.coerce(tau)
    report = Lemma38Report(kmax)
    for k in range(2, kmax + 1):
        rec = mersenne(tau, k, bits)
        if not rec.is_prime:
            continue
        report.prime_indices.append(k)
        if not rec.prime_status.certain:
            report.confidence = rec.prime_status.confidence
        if not rational_is_prime(k):
            report.counterexamples.append(k)
    return report


def composite_index_split(tau: IntLike, n: int, m: int) -> tuple[EInt, EInt]:
    """Split ``M_{nm} = M_n * (tau**(nm) - 1)/(tau**n - 1)`` exactly.

    Raises if either factor is a unit or the division is inexact.
    """
    tau = EInt.coerce(tau)
    left = _geometric(tau, n)
    right = exact_div(tau ** (n * m) - 1, tau**n - 1)
    if right is None:
        raise ArithmeticError("tau**n - 1 does not divide tau**(nm) - 1")
    if is_unit(left) or is_unit(right):
        raise ArithmeticError(f"trivial split of M_{n * m}")
    return left, right
