"""Command-line interface.

Exit codes: 0 on success, 2 on usage errors, 1 on domain errors (the error
class name goes to stderr).
"""

import argparse
import sys
from fractions import Fraction

from .classifier import classify, theoretical_densities
from .curvedata import TwistedQuartic, get_model
from .errors import DquintError, UsageError
from .localsolve import is_els, solvable_at
from .points import QuarticPoint, find_point, point_to_quintuple, verify_d_tuple
from .survey import emit, over_256, survey_with_records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dquint",
        description="Rational points on prime quadratic twists of the quartic "
        "y^2 = (x^2-x-3)(x^2+2x-12), and the D(d)-quintuples they produce.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a single twist d = +/-p")
    p.add_argument("d", type=int)

    p = sub.add_parser("survey", help="classify both signs of every prime <= X")
    p.add_argument("--max", type=int, required=True, metavar="X")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--jobs", type=int, default=1, metavar="N")

    p = sub.add_parser("search", help="bounded-height point search on a twist of H")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--model", choices=("H", "H-alt"), default="H")

    p = sub.add_parser("quintuple", help="build the D(d)-quintuple from a point")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", required=True, metavar="A/B")
    p.add_argument("--y", required=True, metavar="C/E")

    p = sub.add_parser("verify-tuple", help="check the D(d) property of a tuple")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--elements", required=True, metavar="r1,r2,...")

    p = sub.add_parser("localsolve", help="local solvability of a twisted quartic")
    p.add_argument("--model", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, default=None)

    sub.add_parser("densities", help="print the limiting verdict densities")
    return parser


def _cmd_classify(args) -> int:
    rec = classify(args.d)
    print(f"d: {rec.d.d}")
    print(f"els: {'true' if rec.els else 'false'}")
    print(f"root_number: {rec.root_number:+d}")
    print(f"t_class: {rec.t_class.value}")
    bits = "; ".join(f"{k}={v}" for k, v in rec.pairing_bits.items())
    print(f"bits: {bits if bits else '-'}")
    print(f"verdict: {rec.verdict.value}")
    assumptions = ", ".join(sorted(a.value for a in rec.assumptions))
    print(f"assumptions: {assumptions if assumptions else '-'}")
    if rec.selmer_dim is not None:
        print(f"selmer_dim: {rec.selmer_dim}")
    if rec.notes:
        print(f"notes: {rec.notes}")
    return 0


def _cmd_survey(args) -> int:
    if args.max < 5:
        raise UsageError("--max must be at least 5")
    agg, records = survey_with_records(args.max, jobs=args.jobs)
    text = emit((agg, records), args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_search(args) -> int:
    q = TwistedQuartic(get_model(args.model), args.d)
    pt = find_point(q, args.height)
    if pt is None:
        print(f"no point found on {args.model}^{args.d} up to height {args.height}")
    elif pt.at_infinity:
        print("point at infinity")
    else:
        print(f"x = {pt.x}")
        print(f"y = {pt.y}")
    return 0


def _cmd_quintuple(args) -> int:
    pt = QuarticPoint(Fraction(args.x), Fraction(args.y))
    tup = point_to_quintuple(pt, args.d)
    for e in tup.elements:
        print(e)
    return 0


def _cmd_verify_tuple(args) -> int:
    elements = [Fraction(part) for part in args.elements.split(",")]
    report = verify_d_tuple(elements, args.d)
    print(f"valid: {'true' if report.ok else 'false'}")
    if not report.ok:
        print(f"failure: {report.reason}")
    return 0


def _cmd_localsolve(args) -> int:
    q = TwistedQuartic(get_model(args.model), args.d)
    if args.p is not None:
        reports = [solvable_at(q, args.p)]
        ok = reports[0].solvable
    else:
        ok, reports = is_els(q)
    for rep in reports:
        line = f"place {rep.place}: {'solvable' if rep.solvable else 'not solvable'}"
        if rep.witness is not None:
            w = rep.witness
            if w.kind == "infinity":
                line += " (point at infinity)"
            elif w.modulus is None:
                line += f" (exact root, {w.kind} {w.residue})"
            else:
                line += f" ({w.kind} {w.residue} mod {w.modulus})"
        print(line)
    if args.p is None:
        print(f"everywhere locally solvable: {'true' if ok else 'false'}")
    return 0


def _cmd_densities(_args) -> int:
    for name, value in theoretical_densities().items():
        shown = over_256(value) if name in ("C1", "C2") else str(value)
        print(f"{name} = {shown}")
    return 0


_HANDLERS = {
    "classify": _cmd_classify,
    "survey": _cmd_survey,
    "search": _cmd_search,
    "quintuple": _cmd_quintuple,
    "verify-tuple": _cmd_verify_tuple,
    "localsolve": _cmd_localsolve,
    "densities": _cmd_densities,
}


def _join_negative_values(argv):
    """Turn ["--x", "-2107/1202"] into ["--x=-2107/1202"] for argparse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--x", "--y", "--elements") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"UsageError: {exc}", file=sys.stderr)
        return 2
    except DquintError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"UsageError: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
