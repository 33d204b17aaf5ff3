"""Perfect and norm-perfect numbers: verification, construction and search.

``eta`` is tau-perfect when ``sigma(eta) == tau * eta`` and tau-norm-perfect
when the two sides merely have equal norm.  Everything here is exact.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .core import UNITS, EInt, IntLike, canonicalize, exact_div, is_unit
from .divisors import prime_power_sigma, sigma, sigma_oracle
from .mersenne import TAU, mersenne
from .primes import (
    DETERMINISTIC,
    PROBABILISTIC,
    SmallestPrimeFactorSieve,
    factor,
    is_prime,
    rational_is_prime,
)

__all__ = [
    "PerfectVerdict",
    "verify",
    "construct_candidate",
    "EuclidEulerEntry",
    "EuclidEulerReport",
    "verify_euclid_euler",
    "SearchBudgetExceeded",
    "SearchReport",
    "search_norm_perfect",
    "ObstructionReport",
    "check_two_mersenne_obstruction",
    "Lemma32Result",
    "lemma32_check",
    "lemma32_sweep",
    "Corollary34Result",
    "corollary34_check",
    "corollary33_check",
]

DEFAULT_SEARCH_LIMIT = 10**7


@dataclass(frozen=True)
class PerfectVerdict:
    eta: EInt
    tau: EInt
    sigma_eta: EInt
    n_sigma: int
    n_tau_eta: int
    is_perfect: bool
    is_norm_perfect: bool
    confidence: str = DETERMINISTIC


def _verdict(tau: EInt, eta: EInt, s: EInt, confidence: str) -> PerfectVerdict:
    te = tau * eta
    n_sigma = s.norm()
    n_te = te.norm()
    return PerfectVerdict(
        eta=eta,
        tau=tau,
        sigma_eta=s,
        n_sigma=n_sigma,
        n_tau_eta=n_te,
        is_perfect=s == te,
        is_norm_perfect=n_sigma == n_te,
        confidence=confidence,
    )


def _require_prime(tau: EInt) -> None:
    if not is_prime(tau):
        raise ValueError(f"tau = {tau} is not an Eisenstein prime")


def verify(tau: IntLike, eta: IntLike, *, sieve: SmallestPrimeFactorSieve | None = None) -> PerfectVerdict:
    """Decide whether ``eta`` is tau-perfect and tau-norm-perfect."""
    tau = EInt.coerce(tau)
    eta = EInt.coerce(eta)
    _require_prime(tau)
    if not eta:
        raise ValueError("eta must be nonzero")
    fac = factor(eta, sieve=sieve)
    s = EInt(1)
    for p, e in fac:
        s = s * prime_power_sigma(p, e)
    return _verdict(tau, eta, s, fac.confidence)


def construct_candidate(tau: IntLike, p: int, use_conjugate: bool = False) -> EInt:
    """``tau**(p-1) * M_p``, or with ``conj(M_p)`` in place of ``M_p``."""
    tau = EInt.coerce(tau)
    _require_prime(tau)
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    m = (tau**p - 1) // (tau - 1)
    if use_conjugate:
        m = m.conjugate()
    return tau ** (p - 1) * m


@dataclass(frozen=True)
class EuclidEulerEntry:
    p: int
    status: str  # "verified", "failed", "skipped-residue", "skipped-composite"
    use_conjugate: bool | None = None
    verdict: PerfectVerdict | None = None
    confidence: str = DETERMINISTIC


@dataclass
class EuclidEulerReport:
    tau: EInt
    pmax: int
    entries: list[EuclidEulerEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.status != "failed" for e in self.entries)

    @property
    def verified(self) -> list[EuclidEulerEntry]:
        return [e for e in self.entries if e.status == "verified"]


def verify_euclid_euler(pmax: int, tau: IntLike = TAU, bits: int | None = None) -> EuclidEulerReport:
    """Build the Euclid-form witness for each prime ``p <= pmax`` and check it.

    Only ``p = +-1 (mod 12)`` with ``M_p`` prime yields a witness.  For
    ``p = 1`` the witness ``tau**(p-1) M_p`` must be tau-perfect; for
    ``p = -1`` the witness ``tau**(p-1) conj(M_p)`` must be norm-perfect but
    not perfect.
    """
    tau = EInt.coerce(tau)
    report = EuclidEulerReport(tau, pmax)
    for p in range(2, pmax + 1):
        if not rational_is_prime(p):
            continue
        if p % 12 not in (1, 11):
            report.entries.append(EuclidEulerEntry(p, "skipped-residue"))
            continue
        rec = mersenne(tau, p, bits)
        if not rec.is_prime:
            report.entries.append(
                EuclidEulerEntry(p, "skipped-composite", confidence=rec.prime_status.confidence)
            )
            continue
        conj = p % 12 == 11
        eta = construct_candidate(tau, p, conj)
        v = verify(tau, eta)
        ok = v.is_norm_perfect and v.is_perfect == (not conj)
        conf = PROBABILISTIC if PROBABILISTIC in (v.confidence, rec.prime_status.confidence) else DETERMINISTIC
        report.entries.append(EuclidEulerEntry(p, "verified" if ok else "failed", conj, v, conf))
    return report


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchReport:
    tau: EInt
    norm_bound: int
    candidates_checked: int = 0
    hits: list[PerfectVerdict] = field(default_factory=list)


def _search_stripe(args) -> tuple[int, list[PerfectVerdict]]:
    tau, bound, a_lo, a_hi, sieve = args
    if sieve is None:
        sieve = SmallestPrimeFactorSieve(bound)
    n_tau = tau.norm()
    checked = 0
    hits = []
    # First sextant: b >= 0, a > b.  N = a^2 - ab + b^2 <= bound.
    for a in range(max(a_lo, 1), a_hi):
        # b ranges over [0, a-1]; N grows with b once b > a/2, and
        # the minimum over b is at b = a/2 with N = 3a^2/4.
        if 3 * a * a > 4 * bound:
            break
        for b in range(a):
            n = a * a - a * b + b * b
            if n > bound:
                if 2 * b > a:
                    break
                continue
            if n % n_tau:
                continue
            eta = EInt(a, b)
            if exact_div(eta, tau) is None:
                continue
            checked += 1
            v = verify(tau, eta, sieve=sieve)
            if v.is_norm_perfect:
                hits.append(v)
    return checked, hits


def search_norm_perfect(
    tau: IntLike,
    norm_bound: int,
    *,
    max_bound: int = DEFAULT_SEARCH_LIMIT,
    workers: int = 1,
) -> SearchReport:
    """Every first-sextant ``eta`` divisible by ``tau`` with ``N(eta) <= norm_bound``
    that is tau-norm-perfect.

    Norm-perfection is associate-invariant, so one representative per
    associate class suffices.  Hits are re-verified through the divisor-sum
    oracle.
    """
    tau = EInt.coerce(tau)
    _require_prime(tau)
    if norm_bound > max_bound:
        raise SearchBudgetExceeded(f"norm bound {norm_bound} exceeds the search limit {max_bound}")
    report = SearchReport(tau, norm_bound)
    if norm_bound < 1:
        return report
    a_max = isqrt(4 * norm_bound // 3) + 2
    if workers <= 1:
        results = [_search_stripe((tau, norm_bound, 1, a_max + 1, SmallestPrimeFactorSieve(norm_bound)))]
    else:
        # stripes of equal point count: the region's width in a grows linearly
        cuts = [round(a_max * (i / workers) ** 0.5) for i in range(workers + 1)]
        cuts[-1] = a_max + 1
        jobs = [(tau, norm_bound, lo, hi, None) for lo, hi in zip(cuts, cuts[1:]) if hi > lo]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_stripe, jobs))
    for checked, hits in results:
        report.candidates_checked += checked
        report.hits.extend(hits)
    for v in report.hits:
        s = sigma_oracle(v.eta)
        if s != v.sigma_eta or s.norm() != (tau * v.eta).norm():
            raise AssertionError(f"search hit {v.eta} failed independent re-verification")
    report.hits.sort(key=lambda v: v.eta.sort_key())
    return report


@dataclass
class ObstructionReport:
    kmax: int
    residues: dict[int, int] = field(default_factory=dict)
    counterexamples: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_two_mersenne_obstruction(kmax: int) -> ObstructionReport:
    """Confirm ``2**k - 1`` is never an Eisenstein prime for ``2 <= k <= kmax``.

    A rational integer is an Eisenstein prime only if it is an inert prime,
    i.e. a rational prime ``== 2 (mod 3)``; ``2**k - 1`` is ``0`` or ``1``
    mod 3.
    """
    report = ObstructionReport(kmax)
    for k in range(2, kmax + 1):
        m = 2**k - 1
        r = m % 3
        report.residues[k] = r
        n = EInt(m).norm()
        if r == 2 or isqrt(n) ** 2 != n or is_prime(m):
            report.counterexamples.append(k)
    return report


@dataclass(frozen=True)
class Lemma32Result:
    z: tuple[Fraction, Fraction] | EInt
    k: int
    lhs: Fraction
    rhs_strict: Fraction
    rhs_weak: Fraction
    strict_holds: bool
    weak_applies: bool
    weak_holds: bool | None
    equality: bool


def _lemma32_eisenstein(z: EInt, k: int) -> Lemma32Result:
    a, b = z.a, z.b
    twice_x = 2 * a - b
    if 4 * twice_x < 10:
        raise ValueError(f"Re z = {Fraction(twice_x, 2)} is below 5/4")
    nz = z.norm()
    s = EInt(1)
    term = EInt(1)
    for _ in range(k):
        term = term * z
        s = s + term
    lhs = Fraction(s.norm())
    base = Fraction(nz ** (k - 1))
    strict = base * (nz + twice_x - 1)
    weak = base * (nz + twice_x + 1)
    # |y| <= x - 1  with  y^2 = 3b^2/4
    weak_applies = twice_x >= 2 and 3 * b * b <= (twice_x - 2) ** 2
    return Lemma32Result(
        z, k, lhs, strict, weak, lhs > strict, weak_applies,
        lhs >= weak if weak_applies else None, lhs == weak,
    )


def lemma32_check(z_re, z_im=0, k: int = 1) -> Lemma32Result:
    """Evaluate both bounds on ``N(1 + z + ... + z**k)`` exactly.

    ``z`` is either an Eisenstein integer (pass it as ``z_re``) or a complex
    number with rational parts.  Requires ``Re z >= 5/4``; the weak bound is
    only meaningful when also ``|Im z| <= Re z - 1``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if isinstance(z_re, EInt):
        return _lemma32_eisenstein(z_re, k)
    x = Fraction(z_re)
    y = Fraction(z_im)
    if x < Fraction(5, 4):
        raise ValueError(f"Re z = {x} is below 5/4")
    # Scale by a common denominator so the geometric sum stays in Z[i].
    d = x.denominator * y.denominator
    X = int(x * d)
    Y = int(y * d)
    sr, si = d**k, 0
    tr, ti = d**k, 0
    for _ in range(k):
        # term <- term * (X + iY) / d, kept as numerators over d**k
        tr, ti = (tr * X - ti * Y) // d, (tr * Y + ti * X) // d
        sr += tr
        si += ti
    dk2 = d ** (2 * k)
    lhs = Fraction(sr * sr + si * si, dk2)
    nz = x * x + y * y
    base = nz ** (k - 1)
    strict = base * (nz + 2 * x - 1)
    weak = base * (nz + 2 * x + 1)
    weak_applies = abs(y) <= x - 1
    return Lemma32Result(
        (x, y), k, lhs, strict, weak, lhs > strict, weak_applies,
        lhs >= weak if weak_applies else None, lhs == weak,
    )


@dataclass
class Lemma32Sweep:
    samples: int
    strict_violations: list[Lemma32Result] = field(default_factory=list)
    weak_violations: list[Lemma32Result] = field(default_factory=list)
    bad_equalities: list[Lemma32Result] = field(default_factory=list)
    weak_tested: int = 0
    equalities: int = 0

    @property
    def ok(self) -> bool:
        return not (self.strict_violations or self.weak_violations or self.bad_equalities)


def lemma32_sweep(samples: int = 10_000, kmax: int = 30, seed: int = 0) -> Lemma32Sweep:
    """Random exact-rational test of both bounds.

    Half of the samples are drawn inside the cone ``|y| <= x - 1`` so the
    weak bound is exercised as often as the strict one.
    """
    rng = random.Random(seed)
    sweep = Lemma32Sweep(samples)
    for i in range(samples):
        d = rng.randint(1, 16)
        X = rng.randint(-(-5 * d // 4), 8 * d)
        if i % 2:
            Y = rng.randint(-(X - d), X - d) if X >= d else 0
        else:
            Y = rng.randint(-4 * X, 4 * X)
        k = rng.randint(1, kmax)
        res = lemma32_check(Fraction(X, d), Fraction(Y, d), k)
        if not res.strict_holds:
            sweep.strict_violations.append(res)
        if res.weak_applies:
            sweep.weak_tested += 1
            if not res.weak_holds:
                sweep.weak_violations.append(res)
            if res.equality:
                sweep.equalities += 1
                if k != 1:
                    sweep.bad_equalities.append(res)
            elif k == 1:
                sweep.bad_equalities.append(res)
    return sweep


@dataclass(frozen=True)
class Corollary34Result:
    eta: EInt
    n_sigma: int
    n_eta: int
    holds: bool
    equality: bool
    unit: bool

    @property
    def ok(self) -> bool:
        return self.holds and self.equality == self.unit


def corollary34_check(eta: IntLike) -> Corollary34Result:
    """``N(sigma(eta)) >= N(eta)``, with equality exactly for units."""
    eta = EInt.coerce(eta)
    if not eta:
        raise ValueError("eta must be nonzero")
    ns = sigma(eta).norm()
    ne = eta.norm()
    return Corollary34Result(eta, ns, ne, ns >= ne, ns == ne, is_unit(eta))


def corollary33_check(pi: IntLike, k: int) -> tuple[bool, bool | None]:
    """Both prime-power bounds on ``N(sigma(pi**k)) / N(pi**k)``.

    With ``pi* = x + iy``: strictly above ``(N(pi) + 2x - 1)/N(pi)``, and at
    least ``(N(pi) + 2x + 1)/N(pi)`` when ``y <= x - 1`` (equal iff k = 1).
    Returns ``(strict_holds, weak_holds_or_None)``.
    """
    pi = canonicalize(EInt.coerce(pi))[1]
    if not is_prime(pi):
        raise ValueError(f"{pi} is not prime")
    n = pi.norm()
    twice_x = 2 * pi.a - pi.b
    lhs = ((pi ** (k + 1) - 1) // (pi - 1)).norm() * n
    rhs_scale = n**k
    strict = lhs > rhs_scale * (n + twice_x - 1)
    # y <= x - 1 with y = b*sqrt(3)/2 >= 0 in the first sextant
    if twice_x >= 2 and 3 * pi.b**2 <= (twice_x - 2) ** 2:
        weak_rhs = rhs_scale * (n + twice_x + 1)
        weak = lhs > weak_rhs if k > 1 else lhs == weak_rhs
        return strict, weak
    return strict, None
