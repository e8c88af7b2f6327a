"""Exact rationals extended by a single unsigned point at infinity.

``ExtFrac`` is the value type for tangle fractions, slot invariants and
slopes.  Values are always stored reduced with a non-negative
denominator, so structural equality is numeric equality.  Infinity is the
unique value ``1/0``; there is no ``-1/0``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .errors import DomainError

__all__ = ["ExtFrac", "INF", "ZERO", "ONE", "add", "invert", "cf_eval", "cf_expand"]

Coercible = Union["ExtFrac", int, Fraction, str, tuple]


class ExtFrac:
    """A reduced fraction ``num/den`` with ``den >= 0``; ``1/0`` is infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if isinstance(num, bool) or isinstance(den, bool) \
                or not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"ExtFrac needs integers, got {num!r}/{den!r}")
        if den == 0:
            if num == 0:
                raise DomainError("0/0 is not a value")
            num = 1
        else:
            g = gcd(num, den)
            if den < 0:
                g = -g
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ExtFrac is immutable")

    @classmethod
    def coerce(cls, value: Coercible) -> "ExtFrac":
        """Build from an ExtFrac, int, Fraction, ``(p, q)`` pair or a string.

        Strings are ``"p/q"``, ``"p"`` or one of ``"inf"``, ``"oo"``, ``"∞"``.
        """
        if isinstance(value, ExtFrac):
            return value
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(*value)
        if isinstance(value, str):
            text = value.strip()
            if text.lower() in ("inf", "oo", "∞", "1/0"):
                return INF
            if "/" in text:
                p, q = text.split("/", 1)
                return cls(int(p), int(q))
            return cls(int(text))
        raise TypeError(f"cannot make an ExtFrac from {value!r}")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def to_fraction(self) -> Fraction:
        if self.den == 0:
            raise DomainError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def floor(self) -> int:
        if self.den == 0:
            raise DomainError("floor of infinity")
        return self.num // self.den

    def invert(self) -> "ExtFrac":
        if self.num == 0:
            return INF
        if self.den == 0:
            return ZERO
        return ExtFrac(self.den, self.num)

    def __add__(self, other):
        try:
            other = ExtFrac.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == 0 or other.den == 0:
            if self.den == 0 and other.den == 0:
                raise DomainError("inf + inf is undefined")
            return INF
        return ExtFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "ExtFrac":
        if self.den == 0:
            return self
        return ExtFrac(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = ExtFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = ExtFrac.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = ExtFrac.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == 0 or other.den == 0:
            if self.num == 0 or other.num == 0:
                raise DomainError("0 * inf is undefined")
            return INF
        return ExtFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ExtFrac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.den != 0 and Fraction(self.num, self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.den == 0:
            return hash(("ExtFrac", "inf"))
        return hash(Fraction(self.num, self.den))

    def __repr__(self):
        return f"ExtFrac({self.num}, {self.den})"

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __reduce__(self):
        return (ExtFrac, (self.num, self.den))


INF = ExtFrac(1, 0)
ZERO = ExtFrac(0)
ONE = ExtFrac(1)


def add(a: ExtFrac, b: ExtFrac) -> ExtFrac:
    return a + b


def invert(a: ExtFrac) -> ExtFrac:
    return a.invert()


def cf_eval(seq: Iterable[int]) -> ExtFrac:
    """Evaluate ``a_n + 1/(a_{n-1} + 1/(... + 1/a_1))``, ``a_1`` innermost.

    Zero entries are legal anywhere: intermediate values pass through
    infinity (``1/0 = inf``, ``a + inf = inf``, ``1/inf = 0``).
    """
    terms = list(seq)
    if not terms:
        raise DomainError("empty continued fraction")
    value = ExtFrac(terms[0])
    for a in terms[1:]:
        # a is finite, so the sum below can never be inf + inf
        value = ExtFrac(a) + value.invert()
    return value


def cf_expand(r: Coercible) -> list[int]:
    """Inverse of :func:`cf_eval`.

    Plain floor-division Euclid, listed innermost first: the last entry is
    ``floor(r)``, which is ``0`` when ``0 <= r < 1`` (so ``1/2 -> [2, 0]``).
    Every entry but the last is ``>= 1`` and the first is ``>= 2`` unless the
    list has length one.
    """
    r = ExtFrac.coerce(r)
    if r.is_infinite:
        raise DomainError("inf has no finite expansion")
    terms = []
    p, q = r.num, r.den
    while True:
        a, rem = divmod(p, q)
        terms.append(a)
        if rem == 0:
            break
        p, q = q, rem
    terms.reverse()
    return terms
