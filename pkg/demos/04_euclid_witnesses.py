"""
Euclid-style witnesses
======================

For p = 1 (mod 12) with M_p prime, tau^(p-1) M_p satisfies sigma = tau*eta.
For p = -1 (mod 12) the conjugate form only matches in norm.
"""

from eisenstein.mersenne import TAU
from eisenstein.perfect import construct_candidate, verify, verify_euclid_euler

# %%
for e in verify_euclid_euler(50).entries:
    print(f"p = {e.p:2d}  {e.status}")

# %%
# p = 193 and p = 239 give large witnesses; their primality is probabilistic.
for p, conj in ((193, False), (239, True)):
    v = verify(TAU, construct_candidate(TAU, p, conj))
    print(f"p = {p}: perfect={v.is_perfect} norm-perfect={v.is_norm_perfect} "
          f"({v.confidence}), N(eta) has {len(str(v.eta.norm()))} digits")
