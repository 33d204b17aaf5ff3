"""
Arithmetic in Z[w]
==================

Elements are a + b*w with w^2 = -1 - w.  Every nonzero element has six
associates, one in each sextant of the plane.
"""

from eisenstein import EInt, UNITS, canonicalize, ediv, gcd, parse_eint, sextant

# %%
# Build a couple of elements and multiply them.
x = parse_eint("5+3w")
y = EInt(2, -1)
print(x, "*", y, "=", x * y)
print("norms:", x.norm(), y.norm(), (x * y).norm())

# %%
# w has order three, 1 + w has order six.
w = EInt(0, 1)
print("w^3 =", w**3, "   (1+w)^6 =", EInt(1, 1) ** 6)

# %%
# The six associates of x, one per sextant, and the canonical representative.
for u in UNITS:
    print(f"  {str(u):>5} * x = {str(u * x):>7}   sextant {sextant(u * x)}")
unit, canon = canonicalize(x)
print("canonical:", canon, "via unit", unit)

# %%
# Division with remainder always leaves a remainder of smaller norm.
q, r = ediv(EInt(100, 37), x)
print(f"100+37w = ({q}) * ({x}) + ({r}),  N(r) = {r.norm()} < {x.norm()}")
print("gcd(100+37w, 5+3w) =", gcd(EInt(100, 37), x))
