import pytest
from hypothesis import strategies as st

from eisenstein.core import EInt


def eints(max_abs=10**6, nonzero=False):
    ints = st.integers(-max_abs, max_abs)
    s = st.builds(EInt, ints, ints)
    if nonzero:
        s = s.filter(bool)
    return s


def box(r):
    """All nonzero a + bw with |a|, |b| <= r."""
    return [EInt(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if a or b]


def by_norm(nmax):
    """All nonzero elements with norm <= nmax."""
    # a^2 - ab + b^2 >= 3/4 max(a, b)^2
    r = int((4 * nmax / 3) ** 0.5) + 1
    return [x for x in box(r) if x.norm() <= nmax]


@pytest.fixture(scope="session")
def small_elements():
    return by_norm(2000)
