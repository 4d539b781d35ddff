"""``uhg`` command line: check, eval, render, census.

Exit codes: 0 success, 1 a check or assertion failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import InvalidModulus, ParseError, UnknownTheorem
from .field import parse_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _field(spec: str):
    try:
        return parse_field(spec)
    except InvalidModulus as exc:
        raise _Usage(f"bad field {spec!r}: {exc}") from None
    except ParseError as exc:
        raise _Usage(str(exc)) from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _parse_script(path: str):
    from .script import ScriptError, parse

    try:
        return parse(_read(path))
    except ScriptError as exc:
        for d in exc.diagnostics:
            print(f"{path}:{d}", file=sys.stderr)
        return None


def cmd_check(args) -> int:
    from .theorems.registry import REGISTRY, run_check

    ctx = _field(args.field)
    if args.trials < 1:
        raise _Usage("--trials must be at least 1")
    ids = list(REGISTRY) if args.theorem == "all" else [args.theorem]
    reports = []
    for tid in ids:
        try:
            rep = run_check(tid, args.trials, args.seed, ctx, jobs=args.jobs)
        except UnknownTheorem:
            raise _Usage(f"unknown theorem {tid!r}; see 'uhg list'") from None
        print(rep.serialize(), flush=True)
        reports.append(rep)
    if args.figure:
        from .figures import tally_figure

        tally_figure(reports, args.figure)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_list(args) -> int:
    from .theorems.registry import REGISTRY

    for t in REGISTRY.values():
        print(f"{t.id}\t{t.kind}\t{t.summary}")
    return EXIT_OK


def cmd_eval(args) -> int:
    from .script import evaluate

    prog = _parse_script(args.file)
    if prog is None:
        return EXIT_USAGE
    ev = evaluate(prog)
    print(ev.report())
    return EXIT_OK if ev.ok else EXIT_FAIL


def cmd_render(args) -> int:
    from .render import parse_viewport, scene_from_bindings
    from .script import evaluate

    try:
        vp = parse_viewport(args.viewport)
    except (ValueError, ZeroDivisionError) as exc:
        raise _Usage(f"bad --viewport: {exc}") from None
    prog = _parse_script(args.file)
    if prog is None:
        return EXIT_USAGE
    if not prog.ctx.is_rational:
        raise _Usage("only rational scripts can be rendered")
    ev = evaluate(prog)
    svg = scene_from_bindings(ev.bindings, vp).svg()
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    if not ev.ok:
        print(ev.report(), file=sys.stderr)
    return EXIT_OK if ev.ok else EXIT_FAIL


def cmd_census(args) -> int:
    from .census import census

    ctx = _field(args.field)
    if ctx.is_rational:
        raise _Usage("census needs a prime field, e.g. --field fp:7")
    rec = census(ctx.p, circles=args.circles)
    print(rec)
    if args.figure:
        from .figures import census_figure

        census_figure(ctx.p, args.figure)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uhg", description="Exact universal hyperbolic geometry.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="fuzz theorems on random configurations")
    c.add_argument("--theorem", required=True, help="theorem id or 'all'")
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--field", default="rational", help="rational or fp:P")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c.add_argument("--figure", help="write a tally chart (PNG) here")
    c.set_defaults(fn=cmd_check)

    ls = sub.add_parser("list", help="list theorem ids")
    ls.set_defaults(fn=cmd_list)

    e = sub.add_parser("eval", help="evaluate a .uhg script")
    e.add_argument("file")
    e.set_defaults(fn=cmd_eval)

    r = sub.add_parser("render", help="draw a .uhg script as SVG")
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--viewport", default="0,0,2.5", help="cx,cy,half-width in null-circle radii")
    r.set_defaults(fn=cmd_render)

    s = sub.add_parser("census", help="exhaustive counts over GF(p)")
    s.add_argument("--field", required=True, help="fp:P")
    s.add_argument("--circles", action="store_true", help="add circle cardinalities")
    s.add_argument("--figure", help="write a plot of the affine plane (PNG) here")
    s.set_defaults(fn=cmd_census)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except _Usage as exc:
        print(f"uhg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
