"""Exact arithmetic in the ring of Eisenstein integers Z[w].

An element is stored as a pair of Python ints ``(a, b)`` standing for
``a + b*w`` with ``w = exp(2*pi*i/3)``, so ``w**2 == -1 - w``.  No floating
point is used anywhere: sextant membership, rounding in Euclidean division
and canonical associates are all decided by integer sign tests.
"""

from __future__ import annotations

import re
from typing import Union

__all__ = [
    "EInt",
    "W",
    "ZETA",
    "UNITS",
    "norm",
    "conj",
    "is_unit",
    "sextant",
    "canonicalize",
    "assoc_in_sextant",
    "ediv",
    "gcd",
    "exact_div",
    "parse_eint",
]

IntLike = Union[int, "EInt"]


class EInt:
    """Eisenstein integer ``a + b*w`` with arbitrary-precision coefficients.

    Instances are immutable and hashable.  Plain ``int`` operands are
    promoted automatically, and an ``EInt`` with ``b == 0`` compares (and
    hashes) equal to the corresponding ``int``.
    """

    __slots__ = ("a", "b")

    a: int
    b: int

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("EInt is immutable")

    def __delattr__(self, name):
        raise AttributeError("EInt is immutable")

    def __reduce__(self):
        return (EInt, (self.a, self.b))

    @classmethod
    def coerce(cls, x: IntLike) -> "EInt":
        if isinstance(x, EInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            return EInt(self.a + other, self.b)
        if isinstance(other, EInt):
            return EInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return EInt(self.a - other, self.b)
        if isinstance(other, EInt):
            return EInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return EInt(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return EInt(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            return EInt(self.a * other, self.b * other)
        if isinstance(other, EInt):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
            return EInt(a * c - bd, a * d + b * c - bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __floordiv__(self, other):
        return ediv(self, EInt.coerce(other))[0]

    def __mod__(self, other):
        return ediv(self, EInt.coerce(other))[1]

    def __divmod__(self, other):
        return ediv(self, EInt.coerce(other))

    def __rfloordiv__(self, other):
        return ediv(EInt.coerce(other), self)[0]

    def __rmod__(self, other):
        return ediv(EInt.coerce(other), self)[1]

    def __rdivmod__(self, other):
        return ediv(EInt.coerce(other), self)

    # -- structure -------------------------------------------------------

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def conjugate(self) -> "EInt":
        # conj(w) = w^2 = -1 - w
        return EInt(self.a - self.b, -self.b)

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, EInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __complex__(self):
        # Display and plotting only; never used for decisions.
        return complex(self.a - self.b / 2, self.b * 3**0.5 / 2)

    def __repr__(self):
        return f"EInt({self.a}, {self.b})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        if b == 1:
            wpart = "w"
        elif b == -1:
            wpart = "-w"
        else:
            wpart = f"{b}w"
        if a == 0:
            return wpart
        sign = "" if wpart.startswith("-") else "+"
        return f"{a}{sign}{wpart}"

    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm(), self.a, self.b)


ZERO = EInt(0, 0)
ONE = EInt(1, 0)
W = EInt(0, 1)
# 1 + w = exp(i*pi/3) generates the unit group; ZETA**j rotates by j*pi/3.
ZETA = EInt(1, 1)
ZETA_INV = EInt(0, -1)

#: The six units, indexed so that ``UNITS[j] == ZETA**j``.
UNITS: tuple[EInt, ...] = (
    EInt(1, 0),
    EInt(1, 1),
    EInt(0, 1),
    EInt(-1, 0),
    EInt(-1, -1),
    EInt(0, -1),
)


def norm(x: IntLike) -> int:
    """Return ``a*a - a*b + b*b``, the squared complex modulus."""
    return EInt.coerce(x).norm()


def conj(x: IntLike) -> EInt:
    return EInt.coerce(x).conjugate()


def is_unit(x: IntLike) -> bool:
    return EInt.coerce(x).norm() == 1


def _in_first_sextant(a: int, b: int) -> bool:
    # 0 <= Arg < pi/3  <=>  b >= 0 and a > b
    return b >= 0 and a > b


def _rotate_cw(a: int, b: int) -> tuple[int, int]:
    # multiply by -w = (1 + w)^-1, a rotation by -pi/3
    return b, b - a


def sextant(x: IntLike) -> int:
    """Sextant index 1..6 of a nonzero element (half-open Arg ranges)."""
    x = EInt.coerce(x)
    if not x:
        raise ValueError("zero has no sextant")
    a, b = x.a, x.b
    for s in range(1, 7):
        if _in_first_sextant(a, b):
            return s
        a, b = _rotate_cw(a, b)
    raise AssertionError("unreachable: sextants partition the nonzero lattice")


def canonicalize(x: IntLike) -> tuple[EInt, EInt]:
    """Return ``(unit, unit * x)`` with ``unit * x`` in the first sextant."""
    x = EInt.coerce(x)
    if not x:
        raise ValueError("zero has no canonical associate")
    s = sextant(x)
    # x lies in sextant s, so x * ZETA**-(s-1) lies in sextant 1
    u = UNITS[(1 - s) % 6]
    return u, u * x


def assoc_in_sextant(x: IntLike, s: int) -> EInt:
    """The unique associate of ``x`` lying in sextant ``s``."""
    if s not in range(1, 7):
        raise ValueError(f"sextant index must be in 1..6, got {s}")
    return canonicalize(x)[1] * UNITS[s - 1]


def _round_half_down(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), ties toward -infinity
    return -((den - 2 * num) // (2 * den))


def ediv(x: IntLike, y: IntLike) -> tuple[EInt, EInt]:
    """Euclidean division: ``x == q*y + r`` with ``norm(r) < norm(y)``.

    The quotient is ``x/y`` rounded coordinate-wise in the (1, w) basis,
    which bounds ``norm(r)`` by ``3/4 * norm(y)``.
    """
    x = EInt.coerce(x)
    y = EInt.coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("Eisenstein division by zero")
    t = x * y.conjugate()
    q = EInt(_round_half_down(t.a, n), _round_half_down(t.b, n))
    return q, x - q * y


def exact_div(x: IntLike, y: IntLike) -> EInt | None:
    """``x / y`` if ``y`` divides ``x``, else ``None``."""
    x = EInt.coerce(x)
    y = EInt.coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("Eisenstein division by zero")
    t = x * y.conjugate()
    qa, ra = divmod(t.a, n)
    if ra:
        return None
    qb, rb = divmod(t.b, n)
    if rb:
        return None
    return EInt(qa, qb)


def gcd(x: IntLike, y: IntLike) -> EInt:
    """Greatest common divisor, normalized to the first sextant.

    ``gcd(0, 0)`` is ``0``.
    """
    x = EInt.coerce(x)
    y = EInt.coerce(y)
    while y:
        x, y = y, ediv(x, y)[1]
    if not x:
        return ZERO
    return canonicalize(x)[1]


# Terms: optional sign, then digits with optional w, or a bare w.
_TERM = re.compile(r"([+-]?)(\d*)([wω]?)")


def parse_eint(text: str) -> EInt:
    """Parse literals such as ``7``, ``-3w``, ``2+1w``, ``w-1`` or ``2 + w``."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty Eisenstein integer literal")
    pos = 0
    const = None
    wcoef = None
    nterms = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, wsym = m.groups()
        if m.end() == pos or (not digits and not wsym):
            raise ValueError(f"malformed Eisenstein integer literal: {text!r}")
        if nterms and not sign:
            raise ValueError(f"missing operator in literal: {text!r}")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if wsym:
            if wcoef is not None:
                raise ValueError(f"repeated w term in literal: {text!r}")
            wcoef = value
        else:
            if const is not None:
                raise ValueError(f"repeated constant term in literal: {text!r}")
            const = value
        nterms += 1
        pos = m.end()
    return EInt(const or 0, wcoef or 0)
