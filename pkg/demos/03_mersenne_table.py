"""
Mersenne numbers over tau = 2 + w
=================================

M_k = (tau^k - 1) / (tau - 1).  Since tau - 1 is a unit the quotient is
exact, and the norm A_k follows a period-12 pattern in k.
"""

from eisenstein.mersenne import TAU, check_lemma38, mersenne, table1_mersenne, table1_norm

# %%
print(" k  k%12  M_k                    A_k       prime")
for k in range(1, 25):
    rec = mersenne(TAU, k)
    assert rec.m == table1_mersenne(k) and rec.a_k == table1_norm(k)
    print(f"{k:2d}  {k % 12:4d}  {str(rec.m):20s}  {rec.a_k:10d}  {rec.is_prime}")

# %%
# Prime M_k only occur at prime k.
report = check_lemma38(60)
print("prime M_k for k <=", 60, ":", report.prime_indices)
