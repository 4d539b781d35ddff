"""Exact evaluation of parsed scripts.

Kernel errors become failed statements naming the error.  Evaluation stops at
the first failed binding (later statements could depend on it) but carries on
past failed assertions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..duality import (
    altitude_line,
    altitude_point,
    base_point,
    conjugate_lines,
    conjugate_points,
    dual,
    form_int,
    midpoints_or_bilines,
    null_point_from_param,
    null_points_on,
    parallel_line,
    reflect,
)
from ..errors import MidpointsAbsent, UHGError
from ..field import Field
from ..metric import quadrance, quadrea, spread
from ..projective import INF, Line, Point, cross_ratio, det3, join, meet
from .syntax import Assertion, Binding, Call, Name, Number, Program, TripleLit, format_statement, parse


class ScriptTypeError(UHGError, TypeError):
    """An argument of the wrong kind (point, line, number or tuple)."""


def _kind(v) -> str:
    if isinstance(v, Point):
        return "point"
    if isinstance(v, Line):
        return "line"
    if isinstance(v, tuple):
        return "tuple"
    if v is INF:
        return "infinity"
    return "number"


def _want(fn: str, args, *kinds):
    got = tuple(_kind(a) for a in args)
    if got not in kinds:
        want = " or ".join("(" + ", ".join(k) + ")" for k in kinds)
        raise ScriptTypeError(f"{fn} expects {want}, got ({', '.join(got)})")


def _fn_midpoints(u, v):
    _want("midpoints", (u, v), ("point", "point"), ("line", "line"))
    m = midpoints_or_bilines(u, v)
    if m is None:
        raise MidpointsAbsent(f"no midpoints of ({u}, {v}) in this field")
    return m


def _fn_conjugates(u, v):
    _want("conjugates", (u, v), ("point", "point"), ("line", "line"))
    return conjugate_points(u, v) if isinstance(u, Point) else conjugate_lines(u, v)


def _couple(name, f):
    def run(a, L):
        _want(name, (a, L), ("point", "line"))
        return f(a, L)
    return run


def _typed(name, f, *kinds):
    def run(*args):
        _want(name, args, *kinds)
        return f(*args)
    return run


PP, LL = ("point", "point"), ("line", "line")

_IMPL = {
    "join": _typed("join", join, PP),
    "meet": _typed("meet", meet, LL),
    "dual": _typed("dual", dual, ("point",), ("line",)),
    "altitude_line": _couple("altitude_line", altitude_line),
    "altitude_point": _couple("altitude_point", altitude_point),
    "parallel_line": _couple("parallel_line", parallel_line),
    "base_point": _couple("base_point", base_point),
    "conjugates": _fn_conjugates,
    "reflect": _typed("reflect", reflect, PP, ("line", "point"), ("point", "line"), LL),
    "midpoints": _fn_midpoints,
    "quadrance": _typed("quadrance", quadrance, PP),
    "spread": _typed("spread", spread, LL),
    "quadrea": _typed("quadrea", quadrea, ("point",) * 3),
    "cross_ratio": _typed("cross_ratio", cross_ratio, ("point",) * 4, ("line",) * 4),
    "null_points_on": lambda L: (_want("null_points_on", (L,), ("line",)), tuple(null_points_on(L)))[1],
    "null_point": None,  # needs the context; handled in expr
}


def format_value(v, ctx: Field) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(format_value(x, ctx) for x in v) + ")"
    if isinstance(v, (Point, Line)) or v is INF:
        return str(v)
    return ctx.format(v)


@dataclass
class StatementResult:
    line: int
    column: int
    kind: str  # "binding" | "assertion"
    label: str
    ok: bool
    value: object = None
    error: Optional[str] = None
    detail: str = ""

    def describe(self, ctx: Field) -> str:
        status = "ok" if self.ok else "FAIL"
        head = f"{self.line}:{self.column}: {status} {self.label}"
        if self.error:
            return f"{head}: {self.error}"
        if self.kind == "binding":
            return f"{head} = {format_value(self.value, ctx)}"
        return f"{head} [{self.detail}]"


@dataclass
class Evaluation:
    ctx: Field
    bindings: Dict[str, object] = field(default_factory=dict)
    results: List[StatementResult] = field(default_factory=list)
    stopped: bool = False

    @property
    def assertions(self) -> List[StatementResult]:
        return [r for r in self.results if r.kind == "assertion"]

    @property
    def ok(self) -> bool:
        return not self.stopped and all(r.ok for r in self.results)

    def report(self) -> str:
        lines = [r.describe(self.ctx) for r in self.results]
        n = len(self.assertions)
        passed = sum(r.ok for r in self.assertions)
        lines.append(f"field {self.ctx.name}: {passed}/{n} assertions passed" + ("; stopped at a failed binding" if self.stopped else ""))
        return "\n".join(lines)


class _Evaluator:
    def __init__(self, prog: Program):
        self.prog = prog
        self.ctx = prog.ctx
        self.env: Dict[str, object] = {}

    def expr(self, e):
        ctx = self.ctx
        if isinstance(e, Number):
            return ctx(e.value)
        if isinstance(e, TripleLit):
            cls = Point if e.kind == "point" else Line
            vals = [ctx(c) for c in e.coords]
            if all(v == 0 for v in vals):
                raise ScriptTypeError(f"{e.kind} literal reduces to the zero triple in {ctx!r}")
            return cls(*vals, ctx=ctx)
        if isinstance(e, Name):
            v = self.env[e.name]
            if e.index is None:
                return v
            if not isinstance(v, tuple):
                raise ScriptTypeError(f"{e.name} is not a tuple")
            if e.index > len(v):
                raise IndexError(f"{e.name} has {len(v)} element(s); no index {e.index}")
            return v[e.index - 1]
        if isinstance(e, Call):
            args = [self.expr(a) for a in e.args]
            if e.fn == "null_point":
                (t,) = args
                if _kind(t) not in ("number", "infinity"):
                    raise ScriptTypeError("null_point expects a number")
                return null_point_from_param(t, ctx)
            return _IMPL[e.fn](*args)
        raise TypeError(f"unknown node {e!r}")

    def assertion(self, st: Assertion):
        """``(ok, value, detail)``; ``value`` is the exact quantity compared (a pair for ``eq``)."""
        ctx = self.ctx
        args = [self.expr(a) for a in st.args]
        p = st.pred
        if p == "collinear":
            _want(p, args, ("point",) * 3)
            d = ctx(det3(*(a.coords for a in args)))
            return d == 0, d, f"det = {ctx.format(d)}"
        if p == "concurrent":
            _want(p, args, ("line",) * 3)
            d = ctx(det3(*(a.coords for a in args)))
            return d == 0, d, f"det = {ctx.format(d)}"
        if p == "incident":
            _want(p, args, ("point", "line"), ("line", "point"))
            a, L = args if isinstance(args[0], Point) else args[::-1]
            v = ctx(form_int(a.coords, L.coords))
            return v == 0, v, f"ax+by-cz = {ctx.format(v)}"
        if p == "perp":
            _want(p, args, PP, LL)
            v = ctx(form_int(args[0].coords, args[1].coords))
            return v == 0, v, f"<u,v> = {ctx.format(v)}"
        if p == "on_null":
            _want(p, args, ("point",), ("line",))
            v = ctx(form_int(args[0].coords, args[0].coords))
            return v == 0, v, f"<a,a> = {ctx.format(v)}"
        if p == "eq":
            lhs, rhs = args
            return lhs == rhs, (lhs, rhs), f"{format_value(lhs, ctx)} vs {format_value(rhs, ctx)}"
        raise KeyError(p)

    def run(self) -> Evaluation:
        ev = Evaluation(self.ctx)
        for st in self.prog.statements:
            if isinstance(st, Binding):
                try:
                    v = self.expr(st.expr)
                except (UHGError, ValueError, TypeError, ZeroDivisionError, IndexError) as exc:
                    ev.results.append(StatementResult(st.line, st.column, "binding", st.name, False,
                                                      error=f"{type(exc).__name__}: {exc}"))
                    ev.stopped = True
                    break
                self.env[st.name] = v
                ev.bindings[st.name] = v
                ev.results.append(StatementResult(st.line, st.column, "binding", st.name, True, v))
            else:
                label = format_statement(st)[len("assert "):-1]
                try:
                    ok, value, detail = self.assertion(st)
                except (UHGError, ValueError, TypeError, ZeroDivisionError, IndexError) as exc:
                    ev.results.append(StatementResult(st.line, st.column, "assertion", label, False,
                                                      error=f"{type(exc).__name__}: {exc}"))
                    continue
                ev.results.append(StatementResult(st.line, st.column, "assertion", label, ok, value, detail=detail))
        return ev


def evaluate(prog: Program) -> Evaluation:
    return _Evaluator(prog).run()


def run_source(src: str) -> Evaluation:
    return evaluate(parse(src))
