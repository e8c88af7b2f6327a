"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or ``m*p != 0``.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import family, network, seifert
from .errors import ConstraintError, DegeneratePointError
from .exactfrac import cf_eval
from .family import FamilyParams
from .seifert import SeifertSpace, format_order
from .verify import DEFAULT_CAP, SUITE_NAMES, SweepBox, parse_range, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
RANGE_FLAGS = ("--l", "--m", "--n", "--p")


class UsageError(Exception):
    pass


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        out = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _params(args) -> FamilyParams:
    try:
        return FamilyParams(args.l, args.m, args.n, args.p)
    except ConstraintError as exc:
        raise UsageError(str(exc)) from exc


def _space_json(x: SeifertSpace) -> dict:
    return {"base": x.base.value, "slots": [str(s) for s in x.slots]}


def cmd_slope(args) -> int:
    params = _params(args)
    gamma = family.surgery_slope(params)
    text = f"{params}\ngamma   = {gamma}\ngamma+1 = {gamma + 1}"
    _emit(args, text, {"params": params.as_dict(), "slope": gamma, "toroidal_slope": gamma + 1})
    return EXIT_OK


def cmd_montesinos(args) -> int:
    params = _params(args)
    seqs = family.tangle_sequences(params)
    slots = family.closed_form_slots(params)
    obj = {
        "params": params.as_dict(),
        "slots": [str(s) for s in slots],
        "sequences": [list(s) for s in seqs],
        "sequence_values": [str(cf_eval(s)) for s in seqs],
    }
    lines = [str(params)]
    for i, (seq, slot) in enumerate(zip(seqs, slots), 1):
        lines.append(f"R_{i} = R{seq} = {slot}")
    try:
        space = family.montesinos_space(params)
    except DegeneratePointError as exc:
        obj.update(degenerate=exc.what, h1_order=None, classification=None)
        lines.append(f"degenerate parameter point: {exc.what} (a slot is inf)")
    else:
        order = seifert.h1_order(space)
        shape = seifert.is_lens_or_s3(space)
        obj.update(degenerate=None, h1_order=order if order != seifert.INFINITE else "INFINITE",
                   classification=str(shape))
        lines.append(f"space = {space}")
        lines.append(f"h1 = {format_order(order)}")
        lines.append(f"classification = {shape}")
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK


def _pieces_report(params: FamilyParams):
    try:
        m1, m2 = family.decomposition_pieces(params)
    except DegeneratePointError as exc:
        return None, [f"degenerate parameter point: {exc.what}"], {"degenerate": exc.what}
    lines, obj = [], {"degenerate": None}
    for name, piece in (("M1", m1), ("M2", m2)):
        irreducible = seifert.boundary_irreducible(piece)
        census = None
        if all(s.den >= 2 for s in piece.slots):
            census = seifert.fibration_census(piece).value
        lines.append(f"{name} = {piece}  boundary_irreducible={irreducible}  fibrations={census or '-'}")
        obj[name] = dict(_space_json(piece), boundary_irreducible=irreducible, fibration_census=census)
    return (m1, m2), lines, obj


def cmd_pieces(args) -> int:
    params = _params(args)
    _, lines, obj = _pieces_report(params)
    _emit(args, "\n".join([str(params), f"gamma+1 = {family.toroidal_slope(params)}"] + lines),
          dict(params=params.as_dict(), toroidal_slope=family.toroidal_slope(params), **obj))
    return EXIT_OK


def cmd_path(args) -> int:
    params = _params(args)
    steps = network.path_from_trefoil(params)
    trace = network.walk(network.start_vertex(params.l), steps)
    expected = family.surgery_slope(params)
    ok = trace[-1].slope == expected
    lines = [str(params), f"start        {trace[0]}"]
    for step, vertex in zip(steps, trace[1:]):
        lines.append(f"{str(step):>12} {vertex}")
    lines.append(f"{len(steps)} steps, final slope {trace[-1].slope}, formula {expected}: "
                 f"{'PASS' if ok else 'FAIL'}")
    obj = {
        "params": params.as_dict(),
        "steps": [{"target": s.target.value, "count": s.count} for s in steps],
        "vertices": [{"slope": v.slope, "lk_a": v.lk_a, "lk_b": v.lk_b, "lk_ab": v.lk_ab} for v in trace],
        "final_slope": trace[-1].slope,
        "expected_slope": expected,
        "passed": ok,
    }
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args) -> int:
    params = _params(args)
    l, m, n, p = params.l, params.m, params.n, params.p
    toroidal = family.toroidal_hypotheses(params)
    nonps = family.nonps_hypotheses(params)
    claim = family.claim_seifert_invariant1(l, m, n)
    lines = [str(params), f"toroidal={str(toroidal).lower()}", f"nonps={str(nonps).lower()}",
             f"index_bounds={str(claim).lower()}"]
    obj = {"params": params.as_dict(), "toroidal": toroidal, "nonps": nonps, "index_bounds": claim}
    _, piece_lines, piece_obj = _pieces_report(params)
    lines += piece_lines
    obj["pieces"] = piece_obj
    if abs(l) == 2:
        order = family.case4_h1_order(params)
        lines.append(f"moebius_refill_h1={format_order(order or seifert.INFINITE)}")
        obj["moebius_refill_h1"] = order if order else "INFINITE"
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        box = SweepBox(
            l=parse_range(args.l_range), m=parse_range(args.m_range),
            n=parse_range(args.n_range), p=parse_range(args.p_range),
            enforce_mp_zero=not args.mp_free, cap=args.cap,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    try:
        report = run_suite(args.suite, box, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, report.to_text(), report.to_json_obj(timing=args.timing))
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="tanglesurgery",
        description="Invariants of the K(l,m,n,p) Seifert surgeries and their consistency checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    point_cmds = {
        "slope": (cmd_slope, "surgery slope gamma and the toroidal slope gamma+1"),
        "montesinos": (cmd_montesinos, "Montesinos slots, tangle sequences and H_1"),
        "pieces": (cmd_pieces, "torus-decomposition pieces of K(gamma+1)"),
        "path": (cmd_path, "twist path from (T_{3,2}, l+5) with every intermediate vertex"),
        "check": (cmd_check, "hypothesis predicates and piece diagnostics"),
    }
    for name, (func, help_text) in point_cmds.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for dim in ("l", "m", "n", "p"):
            sp.add_argument(dim, type=int)
        sp.set_defaults(func=func)

    vp = sub.add_parser("verify", parents=[common], help="sweep a parameter box with a named suite")
    vp.add_argument("suite", choices=SUITE_NAMES)
    for dim in ("l", "m", "n", "p"):
        vp.add_argument(f"--{dim}", dest=f"{dim}_range", default="-8..8", metavar="A..B")
    vp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of points")
    vp.add_argument("--jobs", type=int, default=1, help="worker processes")
    vp.add_argument("--mp-free", action="store_true",
                    help="keep points with m*p != 0 in the box (they are reported as skips)")
    vp.add_argument("--timing", action="store_true",
                    help="fill in elapsed_ms in JSON output (makes output run-dependent)")
    vp.set_defaults(func=cmd_verify)
    return parser


def _glue_ranges(argv: list[str]) -> list[str]:
    # argparse reads "--l -8..8" as two flags; rewrite to "--l=-8..8"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


@contextmanager
def _usage_errors(parser):
    try:
        yield
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_ranges(list(sys.argv[1:] if argv is None else argv)))
    with _usage_errors(parser):
        return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
