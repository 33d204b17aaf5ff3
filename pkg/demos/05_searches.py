"""
Exhaustive norm-perfect searches
================================

Scan every canonical eta divisible by tau up to a norm bound.  For tau = 2
and tau = 2 + w nothing turns up; other tau can have small solutions.
"""

import time

from eisenstein import EInt, search_norm_perfect, verify

# %%
for tau, bound in ((EInt(2), 10**5), (EInt(2, 1), 10**5), (EInt(3, 1), 20_000), (EInt(3, 2), 20_000)):
    t0 = time.perf_counter()
    report = search_norm_perfect(tau, bound)
    hits = ", ".join(str(v.eta) for v in report.hits) or "none"
    print(f"tau = {str(tau):5s} N <= {bound:6d}: {report.candidates_checked:6d} candidates, "
          f"hits: {hits}  ({time.perf_counter() - t0:.1f} s)")

# %%
# A hit: sigma(17+w) and (3+w)(17+w) have the same norm but differ.
v = verify(EInt(3, 1), EInt(17, 1))
print(v.sigma_eta, EInt(3, 1) * EInt(17, 1), v.n_sigma, v.n_tau_eta)
