"""
Primes and the complex divisor sum
==================================

Rational primes split, stay inert, or ramify according to their residue
mod 3.  The divisor sum adds one canonical divisor from each associate class.
"""

from eisenstein import EInt, canonical_divisors, factor, sigma, split_prime

# %%
for p in (2, 3, 5, 7, 13, 101):
    sc = split_prime(p)
    print(f"{p:4d}  {sc.tag:9s}  {', '.join(map(str, sc.primes))}")

# %%
# 7 = -w (3+w)(3+2w), so it has four canonical divisors.
fac = factor(7)
print("factor(7):", fac.unit, [(str(p), e) for p, e in fac])
divs = canonical_divisors(7)
print("divisors:", [str(d) for d in divs])
print("sum:", sum(divs, EInt(0)), "=", sigma(7))

# %%
# The divisor sum of a rational integer is not the classical one once a
# split or ramified prime divides it.
for n in (5, 10, 7, 3, 28):
    print(f"sigma({n}) = {sigma(n)}")
