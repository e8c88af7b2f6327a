"""Parameter-box sweeps that check the family's identities point by point.

Each suite maps a :class:`SweepBox` to a list of points and checks every
point independently, giving one :class:`Outcome` per point.  Points are
sorted, so reports do not depend on how the work was split across
processes.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import family, network, seifert
from .errors import DegeneratePointError
from .exactfrac import ExtFrac, cf_eval
from .family import FamilyParams
from .seifert import INFINITE, Census, format_order

__all__ = ["SweepBox", "Outcome", "VerificationReport", "SUITES", "run_suite", "parse_range"]

DEFAULT_CAP = 10**7
DIMS = ("l", "m", "n", "p")


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` (inclusive) or a single integer ``"A"``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
    else:
        lo_i = hi_i = int(text)
    if lo_i > hi_i:
        raise ValueError(f"empty range {text!r}")
    return lo_i, hi_i


@dataclass(frozen=True)
class SweepBox:
    l: tuple[int, int] = (-8, 8)
    m: tuple[int, int] = (-8, 8)
    n: tuple[int, int] = (-8, 8)
    p: tuple[int, int] = (-8, 8)
    enforce_mp_zero: bool = True
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        for dim in DIMS:
            lo, hi = getattr(self, dim)
            if lo > hi:
                raise ValueError(f"empty range for {dim}: {lo}..{hi}")

    def values(self, dim: str) -> range:
        lo, hi = getattr(self, dim)
        return range(lo, hi + 1)

    def as_dict(self) -> dict:
        d = {dim: list(getattr(self, dim)) for dim in DIMS}
        d["enforce_mp_zero"] = self.enforce_mp_zero
        return d


@dataclass(frozen=True)
class Outcome:
    point: tuple
    status: str  # "ok", "skip" or "fail"
    reason: str = ""
    expected: object = None
    actual: object = None


@dataclass
class VerificationReport:
    suite: str
    box: SweepBox
    checked: int = 0
    skipped: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float | None = None
    parts: list["VerificationReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self, timing: bool = False) -> dict:
        obj = {
            "suite": self.suite,
            "box": self.box.as_dict(),
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }
        if self.parts:
            obj["suites"] = [
                {"suite": r.suite, "checked": r.checked, "skipped": len(r.skipped),
                 "failures": len(r.failures), "passed": r.passed}
                for r in self.parts
            ]
        return obj

    def to_text(self) -> str:
        lines = []
        for r in self.parts or [self]:
            verdict = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.suite}: {verdict}  checked={r.checked} "
                         f"skipped={len(r.skipped)} failures={len(r.failures)}")
            for rec in r.failures[:20]:
                lines.append(f"  FAIL {rec['params']}: expected {rec['expected']}, actual {rec['actual']}")
            if len(r.failures) > 20:
                lines.append(f"  ... {len(r.failures) - 20} more failures")
        if self.parts:
            lines.append(f"all: {'PASS' if self.passed else 'FAIL'}  checked={self.checked} "
                         f"skipped={len(self.skipped)} failures={len(self.failures)}")
        if self.elapsed_ms is not None:
            lines.append(f"elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, (ExtFrac, Census)):
        return str(value) if isinstance(value, ExtFrac) else value.value
    if isinstance(value, float) and value == INFINITE:
        return format_order(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _ok(point) -> Outcome:
    return Outcome(point, "ok")


def _skip(point, reason: str) -> Outcome:
    return Outcome(point, "skip", reason=reason)


def _fail(point, reason: str, expected, actual) -> Outcome:
    return Outcome(point, "fail", reason=reason, expected=_jsonable(expected), actual=_jsonable(actual))


# --- point sets -----------------------------------------------------------

def _family_points(box: SweepBox) -> list[tuple[int, int, int, int]]:
    pts = itertools.product(*(box.values(d) for d in DIMS))
    if box.enforce_mp_zero:
        return [pt for pt in pts if pt[1] * pt[3] == 0]
    return list(pts)


def _ln_points(box: SweepBox) -> list[tuple[int, int]]:
    return list(itertools.product(box.values("l"), box.values("n")))


def _claim_points(box: SweepBox) -> list[tuple[int, int, int, int]]:
    pts = itertools.product((-2, 2), box.values("m"), box.values("n"), box.values("p"))
    if box.enforce_mp_zero:
        return [pt for pt in pts if pt[1] * pt[3] == 0]
    return list(pts)


def _params(point) -> FamilyParams | None:
    l, m, n, p = point
    if m * p != 0:
        return None
    return FamilyParams(l, m, n, p)


_MP_SKIP = "m*p != 0: the family is undefined"


# --- per-point checks -----------------------------------------------------
# Module attributes are looked up at call time so tests can patch them.

def check_h1_slope(point) -> Outcome:
    params = _params(point)
    if params is None:
        return _skip(point, _MP_SKIP)
    gamma = family.surgery_slope(params)
    try:
        space = family.montesinos_space(params)
    except DegeneratePointError as exc:
        return _skip(point, f"zero denominator: {exc.what}")
    expected = INFINITE if gamma == 0 else abs(gamma)
    actual = seifert.h1_order(space)
    if actual != expected:
        return _fail(point, "h1 order != |gamma|", expected, actual)
    return _ok(point)


def check_cf_fractions(point) -> Outcome:
    params = _params(point)
    if params is None:
        return _skip(point, _MP_SKIP)
    try:
        closed = family.montesinos_fractions(params)
    except DegeneratePointError as exc:
        return _skip(point, f"zero denominator: {exc.what}")
    evaluated = tuple(cf_eval(seq) for seq in family.tangle_sequences(params))
    if evaluated != closed:
        return _fail(point, "cf_eval(sequence) != closed form", closed, evaluated)
    return _ok(point)


def check_path_realization(point) -> Outcome:
    params = _params(point)
    if params is None:
        return _skip(point, _MP_SKIP)
    expected = family.surgery_slope(params)
    end = network.realize_path(network.start_vertex(params.l), network.path_from_trefoil(params))
    if end.slope != expected:
        return _fail(point, "path slope != gamma", expected, end.slope)
    return _ok(point)


def check_isotopy_identity(point) -> Outcome:
    l, n = point
    left, right = FamilyParams(l, 1, n - 1, 0), FamilyParams(l, 0, n, 1)
    g_left, g_right = family.surgery_slope(left), family.surgery_slope(right)
    if g_left != g_right:
        return _fail(point, "gamma(l,1,n-1,0) != gamma(l,0,n,1)", g_left, g_right)
    s_left, s_right = family.closed_form_slots(left), family.closed_form_slots(right)
    if s_left != s_right:
        return _fail(point, "Montesinos slots differ", s_left, s_right)
    if any(s.is_infinite for s in s_left):
        return _skip(point, "zero denominator (both sides degenerate in the same slot)")
    return _ok(point)


def check_annular_composition(point) -> Outcome:
    l, n = point
    v = network.start_vertex(l)
    annular = network.annular_twist(v, n)
    increment = n * (l*l + 8*l + 12) + 2 * n * n * (l + 2)**2
    if annular.slope - v.slope != increment:
        return _fail(point, "annular slope increment", increment, annular.slope - v.slope)
    unit = network.path_from_trefoil(FamilyParams(l, 0, n, 0))
    stepped = network.realize_path(v, unit)
    if not stepped.same_up_to_sign(annular):
        return _fail(point, "annular twist != unit-step rounds",
                     str(annular), str(stepped))
    if network.annular_twist(annular, -n) != v:
        return _fail(point, "annular twist does not invert", str(v), str(network.annular_twist(annular, -n)))
    for which in (network.Target.SEIFERTER_A, network.Target.SEIFERTER_B):
        back = network.twist_seiferter(network.twist_seiferter(v, which, n), which, -n)
        if back != v:
            return _fail(point, f"twist along {which.value} does not invert", str(v), str(back))
    pair = network.compose_two_twists(-1, 1, 2)
    if pair != network.annular_surgery_coeffs(1, 2) or pair != (ExtFrac(1), ExtFrac(3)):
        return _fail(point, "(-1 along c_1, +1 along c_2) != annular 1-twist",
                     "(1, 3)", [str(x) for x in pair])
    return _ok(point)


def check_homology_claims(point) -> Outcome:
    params = _params(point)
    if params is None:
        return _skip(point, _MP_SKIP)
    l, m, n, p = point
    order = family.case4_h1_order(params)
    h1 = seifert.h1_order(family.case4_space(params))
    expected = INFINITE if order == 0 else order
    if h1 != expected:
        return _fail(point, "two-slot h1 != expanded polynomial", expected, h1)
    if order == 1:
        if p == 0 and l == 2 and n != -1:
            return _fail(point, "order 1 with l=2 forces n = -1", "n = -1", n)
        if p == 0 and l == -2 and m not in (0, 2):
            return _fail(point, "order 1 with l=-2 forces m in {0, 2}", "m in {0, 2}", m)
        if m == 0 and l == 2 and n != 0:
            return _fail(point, "order 1 with l=2, m=0 forces n = 0", "n = 0", n)
        if m == 0 and l == -2 and p not in (0, 2):
            return _fail(point, "order 1 with l=-2, m=0 forces p in {0, 2}", "p in {0, 2}", p)
    elif l == -2 and ((p == 0 and m in (0, 2)) or (m == 0 and p in (0, 2))):
        return _fail(point, "l=-2 order must be 1 here", 1, order)
    return _ok(point)


def check_hypothesis_implications(point) -> Outcome:
    params = _params(point)
    if params is None:
        return _skip(point, _MP_SKIP)
    l, m, n, p = point
    nonps = family.nonps_hypotheses(params)
    toroidal = family.toroidal_hypotheses(params)
    if nonps and not toroidal:
        return _fail(point, "nonps does not imply toroidal", True, False)
    if p == 0 and toroidal and not family.claim_seifert_invariant1(l, m, n):
        return _fail(point, "toroidal does not imply the index bounds", True, False)
    if nonps and abs(l) == 2 and family.case4_h1_order(params) == 1:
        return _fail(point, "refilled space is S^3 under nonps", "order != 1", 1)
    if toroidal:
        m1, m2 = family.decomposition_pieces(params)
        if not (seifert.boundary_irreducible(m1) and seifert.boundary_irreducible(m2)):
            return _fail(point, "piece not boundary-irreducible", True, [str(m1), str(m2)])
        odd = 2*n + 1 if p == 0 else 4*n*p - 2*n - 1
        if abs(odd) < 3 or abs(odd) not in (s.den for s in m1.slots):
            return _fail(point, "M_1 lacks an odd index >= 3", abs(odd), str(m1))
        if seifert.fibration_census(m1) is not Census.UNIQUE:
            return _fail(point, "M_1 fibration not unique", Census.UNIQUE, seifert.fibration_census(m1))
        census = seifert.fibration_census(m2)
        want = Census.DISK_AND_MOEBIUS if abs(l) == 2 else Census.UNIQUE
        if census is not want:
            return _fail(point, "M_2 fibration census", want, census)
    return _ok(point)


@dataclass(frozen=True)
class Suite:
    name: str
    points: Callable[[SweepBox], list]
    dims: tuple[str, ...]
    check: str  # name of a module-level check function, resolved in the worker


SUITES: dict[str, Suite] = {
    s.name: s for s in (
        Suite("h1-slope", _family_points, DIMS, "check_h1_slope"),
        Suite("cf-fractions", _family_points, DIMS, "check_cf_fractions"),
        Suite("path-realization", _family_points, DIMS, "check_path_realization"),
        Suite("isotopy-identity", _ln_points, ("l", "n"), "check_isotopy_identity"),
        Suite("annular-composition", _ln_points, ("l", "n"), "check_annular_composition"),
        Suite("homology-claims", _claim_points, DIMS, "check_homology_claims"),
        Suite("hypothesis-implications", _family_points, DIMS, "check_hypothesis_implications"),
    )
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_chunk(check_name: str, chunk: list) -> list[Outcome]:
    check = globals()[check_name]
    return [check(pt) for pt in chunk]


def _chunks(seq: list, k: int) -> list[list]:
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def box_size(suite: str, box: SweepBox) -> int:
    names = SUITES if suite == "all" else (suite,)
    return sum(len(SUITES[s].points(box)) for s in names)


def _run_one(suite: Suite, box: SweepBox, jobs: int, pool) -> VerificationReport:
    points = suite.points(box)
    if pool is None or len(points) < 2:
        outcomes = _run_chunk(suite.check, points)
    else:
        parts = pool.map(_run_chunk, itertools.repeat(suite.check), _chunks(points, 4 * jobs))
        outcomes = [o for part in parts for o in part]
    outcomes.sort(key=lambda o: o.point)
    report = VerificationReport(suite.name, box)
    for o in outcomes:
        params = dict(zip(suite.dims, o.point))
        if o.status == "ok":
            report.checked += 1
        elif o.status == "skip":
            report.skipped.append({"suite": suite.name, "params": params, "reason": o.reason})
        else:
            report.checked += 1
            report.failures.append({"suite": suite.name, "params": params, "reason": o.reason,
                                    "expected": o.expected, "actual": o.actual})
    return report


def run_suite(name: str, box: SweepBox, jobs: int = 1) -> VerificationReport:
    """Run one suite (or ``"all"``) over ``box`` using ``jobs`` processes."""
    if name not in SUITE_NAMES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    size = box_size(name, box)
    if size > box.cap:
        raise ValueError(f"box has {size} points, above the cap of {box.cap}")
    started = time.perf_counter()
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        if name == "all":
            parts = [_run_one(s, box, jobs, pool) for s in SUITES.values()]
            report = VerificationReport("all", box, parts=parts)
            for r in parts:
                report.checked += r.checked
                report.skipped.extend(r.skipped)
                report.failures.extend(r.failures)
        else:
            report = _run_one(SUITES[name], box, jobs, pool)
    finally:
        if pool is not None:
            pool.shutdown()
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return report
