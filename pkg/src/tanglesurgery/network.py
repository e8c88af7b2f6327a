"""Twisting Seifert surgeries along the seiferters c_a, c_b.

A vertex records the surgery slope together with the linking numbers
``lk(K, c_a)``, ``lk(K, c_b)`` and ``lk(c_a, c_b)``, which is all that the
slope updates need.  A ``t``-twist along a seiferter ``c`` with
``lk(K, c) = w`` adds ``t * w**2`` to the slope.  The other seiferter's
linking with K moves by ``t * w * lk(c_a, c_b)``.

Linking numbers carry signs from a fixed starting orientation.  Unit-step
paths and the annular twist can end with both signs flipped relative to
each other, so compare linking numbers up to a simultaneous sign.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from .errors import DomainError
from .exactfrac import ExtFrac
from .family import FamilyParams

__all__ = [
    "Target", "SurgeryVertex", "TwistStep", "start_vertex", "twist_seiferter",
    "annular_twist", "apply_step", "walk", "realize_path", "path_from_trefoil",
    "annular_surgery_coeffs", "compose_two_twists",
]

LK_AB = 2  # c_a u c_b is the (4, 2) torus link; |lk| stays 2 under every twist used here


class Target(Enum):
    SEIFERTER_A = "A"
    SEIFERTER_B = "B"
    ANNULAR_PAIR = "AB"


@dataclass(frozen=True)
class SurgeryVertex:
    slope: int
    lk_a: int
    lk_b: int
    lk_ab: int = LK_AB

    def same_up_to_sign(self, other: "SurgeryVertex") -> bool:
        """Equal slopes and linking numbers equal up to one common sign."""
        if self.slope != other.slope or self.lk_ab != other.lk_ab:
            return False
        return (self.lk_a, self.lk_b) in ((other.lk_a, other.lk_b), (-other.lk_a, -other.lk_b))

    def __str__(self):
        return f"slope={self.slope} lk(K,c_a)={self.lk_a} lk(K,c_b)={self.lk_b} lk(c_a,c_b)={self.lk_ab}"


@dataclass(frozen=True)
class TwistStep:
    target: Target
    count: int

    def __post_init__(self):
        if self.count == 0:
            raise ValueError("a twist step needs a nonzero count")

    def inverse(self) -> "TwistStep":
        return TwistStep(self.target, -self.count)

    def __str__(self):
        return f"{self.target.value}:{self.count:+d}"


def start_vertex(l: int) -> SurgeryVertex:
    """(T_{3,2}, l + 5) with lk(K, c_a) = l + 4 and lk(K, c_b) = 2."""
    return SurgeryVertex(slope=l + 5, lk_a=l + 4, lk_b=2, lk_ab=LK_AB)


def twist_seiferter(v: SurgeryVertex, which: Target, t: int) -> SurgeryVertex:
    if which is Target.SEIFERTER_A:
        return replace(v, slope=v.slope + t * v.lk_a**2, lk_b=v.lk_b + t * v.lk_a * v.lk_ab)
    if which is Target.SEIFERTER_B:
        return replace(v, slope=v.slope + t * v.lk_b**2, lk_a=v.lk_a + t * v.lk_b * v.lk_ab)
    raise DomainError(f"{which} is not a single seiferter")


def annular_twist(v: SurgeryVertex, n: int) -> SurgeryVertex:
    """``n``-twist along the annular pair (c_a, c_b).

    The annulus meets K algebraically ``lk_a - lk_b`` times and is twisted
    twice, so each linking number grows by ``2n(lk_a - lk_b)``.
    """
    d = v.lk_a - v.lk_b
    return replace(
        v,
        slope=v.slope + n * (v.lk_a**2 - v.lk_b**2) + 2 * n * n * d * d,
        lk_a=v.lk_a + 2 * n * d,
        lk_b=v.lk_b + 2 * n * d,
    )


def apply_step(v: SurgeryVertex, step: TwistStep) -> SurgeryVertex:
    if step.target is Target.ANNULAR_PAIR:
        return annular_twist(v, step.count)
    return twist_seiferter(v, step.target, step.count)


def walk(start: SurgeryVertex, steps: Iterable[TwistStep]) -> list[SurgeryVertex]:
    """Every vertex visited, starting vertex included."""
    trace = [start]
    for step in steps:
        trace.append(apply_step(trace[-1], step))
    return trace


def realize_path(start: SurgeryVertex, steps: Iterable[TwistStep]) -> SurgeryVertex:
    return walk(start, steps)[-1]


def path_from_trefoil(params: FamilyParams) -> list[TwistStep]:
    """Unit twists taking (T_{3,2}, l + 5) to (K(l,m,n,p), gamma).

    ``n`` rounds of (-1 along c_a, +1 along c_b), run backwards as
    (-1 along c_b, +1 along c_a) for negative ``n``, then ``-m`` along c_a
    or ``-p`` along c_b.
    """
    a, b = Target.SEIFERTER_A, Target.SEIFERTER_B
    if params.n >= 0:
        round_ = [TwistStep(a, -1), TwistStep(b, 1)]
    else:
        round_ = [TwistStep(b, -1), TwistStep(a, 1)]
    steps = round_ * abs(params.n)
    if params.p == 0 and params.m != 0:
        steps.append(TwistStep(a, -params.m))
    elif params.m == 0 and params.p != 0:
        steps.append(TwistStep(b, -params.p))
    return steps


def annular_surgery_coeffs(p: int, lk: int) -> tuple[ExtFrac, ExtFrac]:
    """Surgery coefficients on (c_1, c_2) realising a ``p``-twist along the annular pair."""
    if p == 0:
        raise DomainError("a 0-twist along an annular pair is not a surgery")
    return ExtFrac(-1, p) + lk, ExtFrac(1, p) + lk


def compose_two_twists(t1: int, t2: int, lk: int) -> tuple[ExtFrac, ExtFrac]:
    """A ``t1``-twist along c_1 followed by a ``t2``-twist along c_2, as one surgery.

    The first twist shifts the framing of c_2 by ``t1 * lk**2``, so the
    preferred longitude after it is ``lambda - t1 lk^2 mu``.  Rewriting the
    ``-1/t2`` surgery in the original framing gives ``-1/t2 - t1 lk^2``.
    """
    if t1 == 0 or t2 == 0:
        raise DomainError("twist counts must be nonzero")
    return ExtFrac(-1, t1), ExtFrac(-1, t2) - t1 * lk * lk
