"""The K(l, m, n, p) family of Seifert fibered surgeries.

K(l, m, n, p) is the covering knot of the trivializable tangle
B(l, m, n, p), defined only when ``m == 0`` or ``p == 0``.  1-untangle
surgery gives the Seifert surgery slope gamma; 0-untangle surgery gives
gamma + 1, a toroidal filling split by one torus into two pieces over the
disk.  Everything here is closed-form integer arithmetic.

Where both ``m`` and ``p`` vanish the ``p == 0`` formulas are used; the
two sets of formulas agree there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, DegeneratePointError, DomainError
from .exactfrac import ExtFrac
from .seifert import Base, SeifertSpace

__all__ = [
    "FamilyParams", "closed_form_slots", "montesinos_fractions", "montesinos_space",
    "tangle_sequences", "slope_formula", "surgery_slope", "toroidal_slope",
    "decomposition_pieces", "toroidal_hypotheses", "nonps_hypotheses",
    "claim_seifert_invariant1", "case4_h1_order", "case4_space",
]


@dataclass(frozen=True, order=True)
class FamilyParams:
    l: int
    m: int
    n: int
    p: int

    def __post_init__(self):
        if self.m * self.p != 0:
            raise ConstraintError(f"m * p must be 0, got m={self.m}, p={self.p}")

    def as_dict(self) -> dict[str, int]:
        return {"l": self.l, "m": self.m, "n": self.n, "p": self.p}

    def __str__(self):
        return f"(l,m,n,p)=({self.l},{self.m},{self.n},{self.p})"


def _slot(num: int, den: int) -> ExtFrac:
    # den == 0 yields inf; callers decide whether that is an error
    return ExtFrac(num, den)


def _nondegenerate(params: FamilyParams, slots, names) -> tuple[ExtFrac, ...]:
    for s, name in zip(slots, names):
        if s.is_infinite:
            raise DegeneratePointError(params, f"{name} = 0")
    return tuple(slots)


def closed_form_slots(params: FamilyParams) -> tuple[ExtFrac, ExtFrac, ExtFrac]:
    """The three Montesinos slot fractions of B + R(1); ``inf`` where a denominator vanishes."""
    l, m, n, p = params.l, params.m, params.n, params.p
    if p == 0:
        return (
            _slot(2*l*m*n + l*m - l*n + 2*m*n + 3*m - n - 1,
                  2*l*l*m*n + l*l*m - l*l*n + 2*l*m - 2*m - l + 1),
            _slot(-(n + 1), 4*n + 3),
            ExtFrac(1, 2),
        )
    return (
        _slot(l*n + n + 1, l*l*n + l - 1),
        _slot(-2*n*p + n - p + 1, 8*n*p - 4*n + 2*p - 3),
        ExtFrac(1, 2),
    )


_MONTESINOS_DENOMINATORS = {
    True: ("2l^2mn+l^2m-l^2n+2lm-2m-l+1", "4n+3", "2"),
    False: ("l^2n+l-1", "8np-4n+2p-3", "2"),
}


def montesinos_fractions(params: FamilyParams) -> tuple[ExtFrac, ExtFrac, ExtFrac]:
    """Slots of the Montesinos link B(l,m,n,p) + R(1), in printed order.

    Raises :class:`DegeneratePointError` at points where a closed-form
    denominator vanishes.
    """
    names = _MONTESINOS_DENOMINATORS[params.p == 0]
    return _nondegenerate(params, closed_form_slots(params), names)


def montesinos_space(params: FamilyParams) -> SeifertSpace:
    """K(l,m,n,p)(gamma) as ``S^2(r_1, r_2, r_3)``."""
    return SeifertSpace(Base.SPHERE, montesinos_fractions(params))


def tangle_sequences(params: FamilyParams) -> tuple[tuple[int, ...], ...]:
    """Twist sequences (innermost first) of the three rational tangles of B + R(1)."""
    l, m, n, p = params.l, params.m, params.n, params.p
    if p == 0:
        return ((m, -2, -n, -l, -1, l, 0), (-n, -1, -3, 0), (2, 0))
    return ((-n, -l, -1, l, 0), (-p, 2, -n, -1, -3, 0), (2, 0))


def slope_formula(l: int, m: int, n: int, p: int) -> int:
    """gamma as a polynomial; no ``m * p == 0`` check."""
    return (5 + l + n*(l*l + 8*l + 12) + 2*n*n*(l + 2)**2
            - m*(2*n*l + 4*n + l + 4)**2 - p*(2*n*l + 4*n + 2)**2)


def surgery_slope(params: FamilyParams) -> int:
    return slope_formula(params.l, params.m, params.n, params.p)


def toroidal_slope(params: FamilyParams) -> int:
    """Slope of the 0-untangle surgery, gamma + 1."""
    return surgery_slope(params) + 1


def decomposition_pieces(params: FamilyParams) -> tuple[SeifertSpace, SeifertSpace]:
    """Pieces M_1, M_2 over the disk of the torus decomposition of K(gamma + 1)."""
    l, m, n, p = params.l, params.m, params.n, params.p
    if p == 0:
        d = 2*l*m*n + l*m - l*n + 2*m - 1
        first = (_slot(-(2*l*m*n + l*m - l*n + 2*m*n + 3*m - n - 1), d),
                 _slot(-(n + 1), 2*n + 1))
        names = ("2lmn+lm-ln+2m-1", "2n+1")
    else:
        first = (_slot(-(l*n + n + 1), l*n + 1),
                 _slot(-(2*n*p - n + p - 1), 4*n*p - 2*n - 1))
        names = ("ln+1", "4np-2n-1")
    second = (_slot(1, l), ExtFrac(-1, 2))
    m1 = _nondegenerate(params, first, names)
    m2 = _nondegenerate(params, second, ("l", "2"))
    return SeifertSpace(Base.DISK, m1), SeifertSpace(Base.DISK, m2)


def toroidal_hypotheses(params: FamilyParams) -> bool:
    """Parameter restrictions under which K(gamma + 1) has a unique essential torus."""
    l, m, n, p = params.l, params.m, params.n, params.p
    if l in (0, 1, -1) or n == 0:
        return False
    if p == 0:
        return n != -1 and (l, m, n) not in ((-2, 0, 1), (2, 1, -2))
    return (l, n) not in ((2, -1), (-2, 1)) and (n, p) not in ((-1, 0), (1, 1))


def nonps_hypotheses(params: FamilyParams) -> bool:
    """Restrictions under which (K, gamma) has no primitive/Seifert position."""
    l, m, n, p = params.l, params.m, params.n, params.p
    if l in (0, 1, -1) or n == 0:
        return False
    if p == 0:
        return (n != -1 and (l, m) not in ((-2, 0), (-2, 2))
                and (l, m, n) != (2, 1, -2))
    return ((l, n) not in ((2, -1), (-2, 1))
            and (l, p) not in ((-2, 0), (-2, 2))
            and (n, p) not in ((-1, 0), (1, 1)))


def claim_seifert_invariant1(l: int, m: int, n: int) -> bool:
    return abs(2*n + 1) >= 3 and abs(l) >= 2 and abs(2*l*m*n + l*m - l*n + 2*m - 1) >= 2


def _require_l_pm2(params: FamilyParams):
    if params.l not in (2, -2):
        raise DomainError(f"only defined for l = +-2, got l={params.l}")


def case4_h1_order(params: FamilyParams) -> int:
    """``|H_1|`` of the refilling of M_1 along a Moebius-band fiber of M_2.

    M_2 = D^2(1/l, -1/2) fibers over the Moebius band only for ``l = +-2``;
    filling M_1 so that this fiber bounds gives a two-slot sphere space,
    whose homology order is one of four polynomials.  Zero means infinite.
    """
    _require_l_pm2(params)
    l, m, n, p = params.l, params.m, params.n, params.p
    if p == 0:
        if l == 2:
            return abs(16*m*n*n + 24*m*n - 8*n*n + 9*m - 8*n - 2)
        return abs(m - 1)
    if l == 2:
        return abs(16*n*n*p - 8*n*n + 8*n*p - 8*n + p - 2)
    return abs(p - 1)


def case4_space(params: FamilyParams) -> SeifertSpace:
    """The two-slot sphere space whose homology :func:`case4_h1_order` gives."""
    _require_l_pm2(params)
    l, m, n, p = params.l, params.m, params.n, params.p
    if p == 0:
        if l == 2:
            pairs = [(-6*m*n - 5*m + 3*n + 1, 4*m*n + 4*m - 2*n - 1), (-n - 1, 2*n + 1)]
        else:
            pairs = [(-2*m*n + m + n - 1, 4*m*n - 2*n + 1), (n, 2*n + 1)]
    elif l == 2:
        pairs = [(-(3*n + 1), 2*n + 1), (-(2*n*p - n + p - 1), 4*n*p - 2*n - 1)]
    else:
        pairs = [(n - 1, -2*n + 1), (2*n*p - n - p, 4*n*p - 2*n - 1)]
    # every denominator above is odd, so never zero
    return SeifertSpace.from_pairs(Base.SPHERE, pairs)
