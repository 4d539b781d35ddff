"""Points and lines of the projective plane with the hyperbolic pairing.

A point ``[x:y:z]`` lies on a line ``(a:b:c)`` exactly when
``a*x + b*y - c*z = 0``.  Both kinds of object carry a :class:`Field` and an
integer triple in canonical scale: a primitive integer triple with positive
leading entry over the rationals, or residues with leading entry 1 over
GF(p).  Equality is therefore structural.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import (
    DegenerateConfiguration,
    DegenerateQuadruple,
    IdenticalArguments,
    NotCollinear,
    ParseError,
)
from .field import QQ, Element, Field


def _canonical(ctx: Field, v: Sequence[int]) -> tuple[int, int, int]:
    x, y, z = v
    p = ctx.p
    if p is None:
        g = gcd(gcd(x, y), z)
        if g == 0:
            raise ValueError("the zero triple is not a projective object")
        lead = x or y or z
        if lead < 0:
            g = -g
        return (x // g, y // g, z // g)
    x, y, z = x % p, y % p, z % p
    lead = x or y or z
    if lead == 0:
        raise ValueError("the zero triple is not a projective object")
    if lead == 1:
        return (x, y, z)
    inv = pow(lead, p - 2, p)
    return (x * inv % p, y * inv % p, z * inv % p)


def _integer_triple(ctx: Field, coords: Sequence) -> tuple[int, int, int]:
    if len(coords) != 3:
        raise ValueError("homogeneous triples have three coordinates")
    if ctx.p is None and all(type(c) is int for c in coords):
        return tuple(coords)  # type: ignore[return-value]
    pairs = [ctx.int_pair(c) for c in coords]
    if ctx.p is not None:
        return tuple(n for n, _ in pairs)  # type: ignore[return-value]
    m = lcm(*(d for _, d in pairs))
    return tuple(n * (m // d) for n, d in pairs)  # type: ignore[return-value]


class _Triple:
    __slots__ = ("ctx", "coords")
    _open, _close = "?", "?"

    def __init__(self, *coords, ctx: Field = QQ):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        self.ctx = ctx
        self.coords = _canonical(ctx, _integer_triple(ctx, coords))

    @classmethod
    def _raw(cls, ctx: Field, v: Sequence[int]):
        """Build from an integer triple without re-validating the context."""
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coords = _canonical(ctx, v)
        return obj

    def elements(self) -> tuple[Element, Element, Element]:
        c = self.ctx
        return tuple(c(v) for v in self.coords)  # type: ignore[return-value]

    def scaled(self) -> tuple:
        """Coordinates scaled so that the last nonzero one is 1 (for display)."""
        return self.elements()

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.ctx == other.ctx
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((type(self).__name__, self.coords, self.ctx.p))

    def __lt__(self, other):
        return self.coords < other.coords

    def __reduce__(self):
        return (type(self)._raw, (self.ctx, self.coords))

    def __str__(self):
        body = ":".join(self.ctx.format(v) for v in self.coords)
        return f"{self._open}{body}{self._close}"

    def __repr__(self):
        if self.ctx.is_rational:
            return f"{type(self).__name__}{str(self)}"
        return f"{type(self).__name__}{str(self)}@{self.ctx!r}"


class Point(_Triple):
    """A projective point ``[x:y:z]``."""

    __slots__ = ()
    _open, _close = "[", "]"

    def dual(self) -> "Line":
        return Line._raw(self.ctx, self.coords)


class Line(_Triple):
    """A projective line ``(a:b:c)``."""

    __slots__ = ()
    _open, _close = "(", ")"

    def dual(self) -> Point:
        return Point._raw(self.ctx, self.coords)


ProjObject = Union[Point, Line]


class _Infinity:
    """The extended value returned by a cross-ratio with a vanishing denominator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("infinity")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


# -- integer helpers -----------------------------------------------------------

def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> int:
    c = cross(v, w)
    return u[0] * c[0] + u[1] * c[1] + u[2] * c[2]


def _same_ctx(objs: Iterable[_Triple]) -> Field:
    it = iter(objs)
    ctx = next(it).ctx
    for o in it:
        if o.ctx != ctx:
            from .errors import MixedContexts
            raise MixedContexts(f"{ctx!r} and {o.ctx!r}")
    return ctx


# -- incidence -------------------------------------------------------------------

def incident(a: Point, L: Line) -> bool:
    x, y, z = a.coords
    l, m, n = L.coords
    ctx = _same_ctx((a, L))
    return ctx.is_zero_int(l * x + m * y - n * z)


def join(a1: Point, a2: Point) -> Line:
    """The line through two distinct points."""
    ctx = _same_ctx((a1, a2))
    n = cross(a1.coords, a2.coords)
    if all(ctx.is_zero_int(c) for c in n):
        raise IdenticalArguments(f"join of identical points {a1}")
    return Line._raw(ctx, (n[0], n[1], -n[2]))


def meet(L1: Line, L2: Line) -> Point:
    """The point on two distinct lines."""
    ctx = _same_ctx((L1, L2))
    u = (L1.coords[0], L1.coords[1], -L1.coords[2])
    v = (L2.coords[0], L2.coords[1], -L2.coords[2])
    n = cross(u, v)
    if all(ctx.is_zero_int(c) for c in n):
        raise IdenticalArguments(f"meet of identical lines {L1}")
    return Point._raw(ctx, n)


def collinear(a: Point, b: Point, c: Point) -> bool:
    ctx = _same_ctx((a, b, c))
    return ctx.is_zero_int(det3(a.coords, b.coords, c.coords))


def concurrent(L: Line, M: Line, N: Line) -> bool:
    ctx = _same_ctx((L, M, N))
    return ctx.is_zero_int(det3(L.coords, M.coords, N.coords))


def points_on(L: Line) -> tuple[Point, Point]:
    """Two distinct points lying on ``L``."""
    ctx = L.ctx
    a, b, c = L.coords
    candidates = [(b, -a, 0), (c, 0, a), (0, c, b)]
    candidates = [v for v in candidates if not all(ctx.is_zero_int(t) for t in v)]
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            u, v = candidates[i], candidates[j]
            if not all(ctx.is_zero_int(t) for t in cross(u, v)):
                return Point._raw(ctx, u), Point._raw(ctx, v)
    raise AssertionError("unreachable: every line has two points")  # pragma: no cover


def lines_through(a: Point) -> tuple[Line, Line]:
    """Two distinct lines passing through ``a``."""
    p, q = points_on(a.dual())
    return p.dual(), q.dual()


# -- cross-ratio -----------------------------------------------------------------

def _bracket(u, v, k):
    return cross(u, v)[k]


def cross_ratio(a, b, c, d):
    """The cross-ratio ``(a,b:c,d)`` of four collinear points or four concurrent lines.

    Returns a field element or :data:`INF`.
    """
    objs = (a, b, c, d)
    if all(isinstance(o, Line) for o in objs):
        a, b, c, d = (o.dual() for o in objs)
    elif not all(isinstance(o, Point) for o in objs):
        raise TypeError("cross_ratio needs four points or four lines")
    ctx = _same_ctx((a, b, c, d))
    pts = [a.coords, b.coords, c.coords, d.coords]
    normal = None
    for i in range(4):
        for j in range(i + 1, 4):
            n = cross(pts[i], pts[j])
            if not all(ctx.is_zero_int(t) for t in n):
                normal = n
                break
        if normal is not None:
            break
    if normal is None:
        raise DegenerateQuadruple("all four points coincide")
    for w in pts:
        if not ctx.is_zero_int(sum(nk * wk for nk, wk in zip(normal, w))):
            raise NotCollinear("cross-ratio of non-collinear points")
    k = next(i for i in range(3) if not ctx.is_zero_int(normal[i]))
    A, B, C, D = pts
    num = ctx.reduce(_bracket(A, C, k) * _bracket(B, D, k))
    den = ctx.reduce(_bracket(B, C, k) * _bracket(A, D, k))
    if ctx.is_zero_int(den):
        if ctx.is_zero_int(num):
            raise DegenerateQuadruple("cross-ratio of the form 0/0")
        return INF
    return ctx.frac(num, den)


# -- classical projective theorems -------------------------------------------------

def pappus_holds(a1: Point, a2: Point, a3: Point, b1: Point, b2: Point, b3: Point) -> bool:
    if not (collinear(a1, a2, a3) and collinear(b1, b2, b3)):
        raise DegenerateConfiguration("Pappus needs two collinear triples")
    try:
        x1 = meet(join(a2, b3), join(a3, b2))
        x2 = meet(join(a3, b1), join(a1, b3))
        x3 = meet(join(a1, b2), join(a2, b1))
    except IdenticalArguments as exc:
        raise DegenerateConfiguration(str(exc)) from None
    return collinear(x1, x2, x3)


def desargues_holds(a1: Point, a2: Point, a3: Point, b1: Point, b2: Point, b3: Point) -> bool:
    try:
        if not concurrent(join(a1, b1), join(a2, b2), join(a3, b3)):
            raise DegenerateConfiguration("Desargues needs perspective triangles")
        x1 = meet(join(a2, a3), join(b2, b3))
        x2 = meet(join(a3, a1), join(b3, b1))
        x3 = meet(join(a1, a2), join(b1, b2))
    except IdenticalArguments as exc:
        raise DegenerateConfiguration(str(exc)) from None
    return collinear(x1, x2, x3)


# -- literals ------------------------------------------------------------------

def parse_point(text: str, ctx: Field = QQ) -> Point:
    return Point(*_parse_triple(text, "[", "]", ctx), ctx=ctx)


def parse_line(text: str, ctx: Field = QQ) -> Line:
    return Line(*_parse_triple(text, "(", ")", ctx), ctx=ctx)


def _parse_triple(text: str, open_: str, close: str, ctx: Field):
    s = text.strip()
    if not (s.startswith(open_) and s.endswith(close)):
        raise ParseError(f"expected {open_}x:y:z{close}, got {text!r}")
    parts = s[1:-1].split(":")
    if len(parts) != 3:
        raise ParseError(f"expected three coordinates in {text!r}")
    vals = [ctx.parse(p) for p in parts]
    if all(v == 0 for v in vals):
        raise ParseError(f"{text!r} is the zero triple")
    return vals
