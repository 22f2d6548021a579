"""Command-line front end: ``twobridge <verb> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .arith import Expansion, cf_value, format_fraction, knot_fraction, parse_fraction, positive_expansion
from .census import run_census
from .errors import DomainError, NotAllowable
from .pretzel import pretzel_surface_table
from .smoothing import Smoothing
from .surface import PeripheralCurve, build_surfaces, cgls_seminorm, crosscheck_expansions
from .tree import assemble_basic_tree, enumerate_actions, export_dot, weight_from_tree


class UsageError(Exception):
    pass


def parse_knot(text: str):
    """``"beta/alpha"`` or a positive expansion ``"[n1,...,nk]"``."""
    text = text.strip()
    try:
        if text.startswith("["):
            n = Expansion.parse(text)
            if n.integer_part or not n.terms or min(n.terms) < 1 or n.terms[-1] < 2:
                raise DomainError(f"{text} is not a positive expansion with last term >= 2")
            return knot_fraction(cf_value(n))
        return knot_fraction(parse_fraction(text))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _dump(obj, out):
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def cmd_surfaces(args, out):
    f = parse_knot(args.knot)
    surfaces = build_surfaces(f)
    if args.json:
        _dump([s.to_record() for s in surfaces], out)
        return 0
    out.write(f"# K({f.denominator},{f.numerator})  n = {positive_expansion(f)}\n")
    out.write(f"{'eps':<12} {'slope':>6} {'weight':>7}  {'orient':<6} m\n")
    for s in surfaces:
        out.write(f"{str(s.eps):<12} {s.slope:>6} {s.weight:>7}  {'yes' if s.orientable else 'no':<6} {s.m}\n")
    return 0


def cmd_seminorm(args, out):
    f = parse_knot(args.knot)
    out.write(f"{cgls_seminorm(f, PeripheralCurve(args.p, args.q))}\n")
    return 0


def cmd_tree(args, out):
    f = parse_knot(args.knot)
    n = positive_expansion(f)
    try:
        s = Smoothing.parse(args.smoothing)
        tree = assemble_basic_tree(n, s)
    except (DomainError, NotAllowable, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    dot = export_dot(tree)
    if args.dot == "-":
        out.write(dot)
    elif args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    if args.json:
        record = tree.to_record()
        record["weight"] = weight_from_tree(tree)
        if args.actions:
            record["actions"] = [list(a) for a in enumerate_actions(tree)]
        _dump(record, out)
    elif args.actions:
        for a in enumerate_actions(tree):
            out.write(" ".join(map(str, a)) + "\n")
    elif not args.dot:
        out.write(f"{n} {s}: anchors {' '.join(tree.anchors)}, weight {weight_from_tree(tree)}\n")
        for att in tree.subtrees:
            out.write(f"  {att.subtree.label} at {att.anchor}\n")
    return 0


def cmd_census(args, out):
    result = run_census(args.max_alpha, jobs=args.jobs)
    for v in result.violations:
        out.write(v + "\n")
    out.write(f"census alpha <= {args.max_alpha}: {result.knots} knots, {len(result.violations)} violations\n")
    return 0 if result.ok else 1


def cmd_crosscheck(args, out):
    report = crosscheck_expansions(parse_knot(args.knot))
    _dump(report.to_record(), out)
    return 0 if report.ok else 1


def cmd_pretzel(args, out):
    try:
        table = pretzel_surface_table(args.p, args.q, args.r)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _dump([rec.to_record() for rec in table], out)
        return 0
    out.write(f"# ({args.p},{args.q},{args.r}) pretzel knot: conjectural weights\n")
    for rec in table:
        slope = "" if rec.slope is None else f" slope {rec.slope}"
        out.write(f"{rec.surface_type:<8} {rec.weight_formula_id:<18} {rec.weight:>6}{slope}  (conjectural)\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("surfaces", help="essential surfaces with slopes and weights")
    p.add_argument("--knot", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_surfaces)

    p = sub.add_parser("seminorm", help="CGLS seminorm of the curve (p, q)")
    p.add_argument("--knot", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_seminorm)

    p = sub.add_parser("tree", help="basic tree for one smoothing")
    p.add_argument("--knot", required=True)
    p.add_argument("--smoothing", required=True)
    p.add_argument("--dot", metavar="FILE", help="write DOT to FILE ('-' for stdout)")
    p.add_argument("--actions", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("census", help="check all invariants up to max alpha")
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("crosscheck", help="generated vs brute-force expansions")
    p.add_argument("--knot", required=True)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("pretzel", help="conjectural pretzel weight table")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pretzel)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
