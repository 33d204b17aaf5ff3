"""Exact arithmetic on the Eisenstein integers, the complex sum-of-divisors
function, Mersenne numbers over Eisenstein primes, and tools for verifying
and searching for perfect and norm-perfect numbers."""

from .core import (
    UNITS,
    W,
    EInt,
    assoc_in_sextant,
    canonicalize,
    conj,
    ediv,
    exact_div,
    gcd,
    is_unit,
    norm,
    parse_eint,
    sextant,
)
from .divisors import canonical_divisors, sigma, sigma_oracle, star
from .mersenne import TAU, MersenneRecord, mersenne, table1_mersenne, table1_norm
from .perfect import PerfectVerdict, SearchReport, construct_candidate, search_norm_perfect, verify
from .primes import Factorization, factor, is_prime, rational_factor, rational_is_prime, split_prime

__version__ = "0.1.0"
