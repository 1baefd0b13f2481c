"""Command-line front end.

Exit codes: 0 everything passed, 1 a claim or assertion failed (or the
triangle is degenerate), 2 usage or I/O error.
"""

import argparse
import json
import sys

from .fuzz import FuzzConfig, run_fuzz
from .geom import GeometryError, Point
from .napoleon import build_bundle
from .qsqrt3 import F3, rat_from_str
from .scenario import run_script
from .svg import LAYERS, build_scene, render_svg
from .theorems import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_triangle(text):
    """Parse ``"ax,ay bx,by cx,cy"`` (rationals like ``1/2`` allowed) into three Points."""
    parts = text.split()
    if len(parts) != 3:
        raise ValueError(f"expected three 'x,y' vertices, got {len(parts)}")
    pts = []
    for part in parts:
        xy = part.split(",")
        if len(xy) != 2:
            raise ValueError(f"bad vertex {part!r}; expected 'x,y'")
        try:
            pts.append(Point(F3(rat_from_str(xy[0])), F3(rat_from_str(xy[1]))))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad vertex {part!r}; coordinates must be integers or p/q") from None
    return tuple(pts)


def _triangle_or_exit(text):
    try:
        return parse_triangle(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_verify(args):
    tri = _triangle_or_exit(args.triangle)
    report = run_all(*tri)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_run(args):
    try:
        with open(args.path, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    outcome, status = run_script(source)
    for a in outcome.assertions:
        verdict = "PASS" if a.passed else "FAIL"
        print(f"line {a.line}: {verdict}: {a.text} -- {a.details}")
    if outcome.error is not None:
        print(f"{args.path}: {outcome.error}", file=sys.stderr)
    else:
        failed = sum(not a.passed for a in outcome.assertions)
        print(f"{len(outcome.assertions) - failed}/{len(outcome.assertions)} assertions passed")
    return status


def cmd_fuzz(args):
    try:
        config = FuzzConfig(args.trials, args.seed, args.bound)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    summary = run_fuzz(config, jobs=args.jobs)
    for line in summary.lines():
        print(line)
    return EXIT_OK if summary.all_passed else EXIT_FAIL


def cmd_svg(args):
    tri = _triangle_or_exit(args.triangle)
    try:
        bundle = build_bundle(*tri)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render_svg(build_scene(bundle, args.layers))
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="napoleonkit", description="Exact verification of Napoleon configuration theorems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="certify every claim for one triangle and print the JSON report")
    p.add_argument("--triangle", required=True, help='vertices as "ax,ay bx,by cx,cy"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("run", help="evaluate a .geo construction script")
    p.add_argument("path")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("fuzz", help="certify the claims on random rational triangles")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=50, help="numerators in [-bound, bound], denominators in [1, bound]")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical for any value)")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("svg", help="draw the configuration as SVG")
    p.add_argument("--triangle", required=True)
    p.add_argument("--layers", choices=LAYERS, default="config")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
