"""Rational tangles and the homology of their branched double covers.

Orientation convention used throughout: on the boundary torus of the
double cover of the ball, ``[mu_inf] . [lambda] = +1``, where ``mu_inf``
lifts the meridian of R(inf) and ``lambda`` lifts its latitude.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .exactfrac import ExtFrac, cf_eval, cf_expand

__all__ = ["RationalTangle", "HomologyClass", "meridian_lift", "covering_slope"]


@dataclass(frozen=True, eq=False)
class RationalTangle:
    """R(a_1, ..., a_n) with ``a_1`` the innermost twist box.

    Two tangles compare equal when their fractions agree; ``seq`` is kept
    only to remember how the tangle was written down.
    """

    seq: tuple[int, ...]
    fraction: ExtFrac = field(init=False)

    def __post_init__(self):
        seq = tuple(self.seq)
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "fraction", cf_eval(seq))

    @classmethod
    def from_fraction(cls, r) -> "RationalTangle":
        r = ExtFrac.coerce(r)
        if r.is_infinite:
            return cls((0, 0))
        return cls(tuple(cf_expand(r)))

    def __eq__(self, other):
        if not isinstance(other, RationalTangle):
            return NotImplemented
        return self.fraction == other.fraction

    def __hash__(self):
        return hash(self.fraction)

    def __str__(self):
        return f"R({', '.join(map(str, self.seq))}) = R({self.fraction})"


@dataclass(frozen=True)
class HomologyClass:
    """``mu * [mu_inf] + lam * [lambda]`` in H_1 of the boundary torus."""

    mu: int
    lam: int

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(-self.mu, -self.lam)

    def dot(self, other: "HomologyClass") -> int:
        """Algebraic intersection number, normalised by ``mu_inf . lambda = 1``."""
        return self.mu * other.lam - self.lam * other.mu

    def same_curve(self, other: "HomologyClass") -> bool:
        """True when both classes are the same unoriented curve."""
        return self == other or self == -other


def meridian_lift(r) -> HomologyClass:
    """Class of a lifted meridian of R(p/q): ``-p [mu_inf] + q [lambda]``."""
    r = ExtFrac.coerce(r)
    return HomologyClass(-r.num, r.den)


def covering_slope(framing: int, s) -> ExtFrac:
    """Surgery slope upstairs for ``s``-untangle surgery.

    ``framing`` is the framing that the lifted latitude of R(inf) gives the
    covering knot; the result is in preferred meridian-longitude
    coordinates.
    """
    s = ExtFrac.coerce(s)
    if s.is_infinite:
        raise DomainError("s = inf is the trivial untangle surgery; no slope")
    return ExtFrac(framing) - s
