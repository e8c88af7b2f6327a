"""Seifert fibered spaces written as a base surface plus slot fractions.

A slot ``p/q`` is the invariant of the fibered solid torus lying over a
rational tangle R(p/q) in a Montesinos link; its core is exceptional of
index ``|q|`` when ``|q| >= 2``.  An ``inf`` slot is a degenerate fiber and
is carried along but rejected by every invariant computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd, inf, prod
from typing import Union

from .errors import DomainError
from .exactfrac import ExtFrac

__all__ = [
    "Base", "SeifertSpace", "INFINITE", "Shape", "Recognition", "Census",
    "sphere", "disk", "h1_order", "normalize", "exceptional_fiber_count",
    "is_lens_or_s3", "boundary_irreducible", "fibration_census", "mirror",
    "equivalent",
]

INFINITE = inf
"""Order of an infinite first homology group."""

Order = Union[int, float]


class Base(Enum):
    SPHERE = "S2"
    DISK = "D2"
    MOEBIUS = "Mb"


class Shape(Enum):
    S3 = "S3"
    LENS = "LENS"
    NEITHER = "NEITHER"


class Census(Enum):
    UNIQUE = "UNIQUE"
    DISK_AND_MOEBIUS = "DISK_AND_MOEBIUS"


@dataclass(frozen=True)
class Recognition:
    shape: Shape
    order: Order | None = None

    def __str__(self):
        if self.shape is Shape.LENS:
            return f"LENS({format_order(self.order)})"
        return self.shape.value


@dataclass(frozen=True, eq=False)
class SeifertSpace:
    base: Base
    slots: tuple[ExtFrac, ...]
    # set by from_pairs when some input pair shared a common factor
    reduced_input: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(ExtFrac.coerce(s) for s in self.slots))

    @classmethod
    def from_pairs(cls, base: Base, pairs, allow_degenerate: bool = False) -> "SeifertSpace":
        """Build from raw ``(p, q)`` integer pairs.

        A ``q == 0`` pair raises unless ``allow_degenerate`` is set.
        """
        slots = []
        reduced = False
        for p, q in pairs:
            if q == 0 and not allow_degenerate:
                raise DomainError(f"slot {p}/{q} has a vanishing denominator")
            if q != 0 and gcd(p, q) != 1:
                reduced = True
            slots.append(ExtFrac(p, q))
        return cls(base, tuple(slots), reduced_input=reduced)

    @property
    def degenerate(self) -> bool:
        return any(s.is_infinite for s in self.slots)

    def _key(self):
        if self.degenerate:
            return (self.base, self.slots)
        return (self.base, normalize(self).slots)

    def __eq__(self, other):
        if not isinstance(other, SeifertSpace):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return f"{self.base.value}({', '.join(map(str, self.slots))})"


def sphere(*slots) -> SeifertSpace:
    return SeifertSpace(Base.SPHERE, slots)


def disk(*slots) -> SeifertSpace:
    return SeifertSpace(Base.DISK, slots)


def format_order(order: Order | None) -> str:
    if order is None:
        return "-"
    return "INFINITE" if order == INFINITE else str(order)


def _require_nondegenerate(x: SeifertSpace):
    if x.degenerate:
        raise DomainError(f"{x} has a degenerate (inf) slot")


def _require_base(x: SeifertSpace, base: Base):
    if x.base is not base:
        raise DomainError(f"expected a space over {base.value}, got {x}")


def h1_order(x: SeifertSpace) -> Order:
    """``|H_1|`` of ``S^2(p_1/q_1, ..., p_k/q_k)``.

    This is ``|sum_i p_i prod_{j != i} q_j|``, or ``INFINITE`` when the sum
    vanishes.
    """
    _require_base(x, Base.SPHERE)
    _require_nondegenerate(x)
    qs = [s.den for s in x.slots]
    total = sum(s.num * prod(qs[:i] + qs[i + 1:]) for i, s in enumerate(x.slots))
    return INFINITE if total == 0 else abs(total)


def normalize(x: SeifertSpace) -> SeifertSpace:
    """Canonical slots: sorted fractional parts in (0, 1), then one integer.

    The integer slot collects every floor that was removed, so the sum of
    the slots, and with it the Euler number, is unchanged.
    """
    _require_nondegenerate(x)
    shift = 0
    exceptional = []
    for s in x.slots:
        a = s.floor()
        shift += a
        if not s.is_integer:
            exceptional.append(s - a)
    exceptional.sort(key=lambda s: s.to_fraction())
    return SeifertSpace(x.base, tuple(exceptional) + (ExtFrac(shift),))


def exceptional_fiber_count(x: SeifertSpace) -> int:
    _require_nondegenerate(x)
    return sum(1 for s in normalize(x).slots if s.den >= 2)


def is_lens_or_s3(x: SeifertSpace) -> Recognition:
    """Classify a sphere-based space as S^3, a lens space, or neither.

    With at most two exceptional fibers the space is a lens space (S^1 x S^2
    counted as order ``INFINITE``); three or more rule both out.
    """
    _require_base(x, Base.SPHERE)
    _require_nondegenerate(x)
    if exceptional_fiber_count(x) >= 3:
        return Recognition(Shape.NEITHER)
    order = h1_order(x)
    if order == 1:
        return Recognition(Shape.S3, 1)
    return Recognition(Shape.LENS, order)


def _two_disk_slots(x: SeifertSpace) -> tuple[ExtFrac, ExtFrac]:
    _require_base(x, Base.DISK)
    _require_nondegenerate(x)
    if len(x.slots) != 2:
        raise DomainError(f"expected exactly two slots, got {x}")
    return x.slots[0], x.slots[1]


def boundary_irreducible(x: SeifertSpace) -> bool:
    """D^2(r_1, r_2) is boundary-irreducible iff neither slot is an integer."""
    r1, r2 = _two_disk_slots(x)
    return not r1.is_integer and not r2.is_integer


def fibration_census(x: SeifertSpace) -> Census:
    """Number of Seifert fibrations of D^2(p_1/q_1, p_2/q_2), ``|q_i| >= 2``.

    Two indices equal to 2 give the twisted circle bundle over the Moebius
    band, which also fibers over the disk; anything else fibers uniquely.
    """
    r1, r2 = _two_disk_slots(x)
    if r1.den < 2 or r2.den < 2:
        raise DomainError(f"both indices must be at least 2 in {x}")
    if r1.den == 2 and r2.den == 2:
        return Census.DISK_AND_MOEBIUS
    return Census.UNIQUE


def mirror(x: SeifertSpace) -> SeifertSpace:
    return SeifertSpace(x.base, tuple(-s for s in x.slots))


def equivalent(x: SeifertSpace, y: SeifertSpace, allow_mirror: bool = False) -> bool:
    """Equality of normal forms, optionally also up to orientation reversal."""
    return x == y or (allow_mirror and mirror(x) == y)
