"""Polarity in the null circle ``x^2 + y^2 - z^2 = 0`` and the constructions it induces.

Duality is the bracket swap ``[x:y:z] <-> (x:y:z)``; perpendicularity,
altitudes, parallels, bases, conjugates, reflections and midpoints are all
built from it together with join and meet.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import _linalg
from .errors import (
    DegenerateConfiguration,
    DegenerateSide,
    DegenerateVertex,
    DualCouple,
    IdenticalArguments,
    NilNullSide,
    NullMirror,
)
from .field import Field
from .projective import (
    INF,
    Line,
    Point,
    ProjObject,
    _same_ctx,
    incident,
    join,
    meet,
    points_on,
)


# -- the bilinear form ------------------------------------------------------------

def form_int(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]


def form(u: ProjObject, v: ProjObject):
    """``<u,v> = u_x v_x + u_y v_y - u_z v_z`` on the canonical representatives."""
    ctx = _same_ctx((u, v))
    return ctx(form_int(u.coords, v.coords))


def is_null(obj: ProjObject) -> bool:
    return obj.ctx.is_zero_int(form_int(obj.coords, obj.coords))


def _require_rational(obj: ProjObject):
    if not obj.ctx.is_rational:
        raise ValueError("interior/exterior is only defined over the rationals")


def is_interior(obj: ProjObject) -> bool:
    """Interior point (inside the null circle) or interior line (meets it twice)."""
    _require_rational(obj)
    n = form_int(obj.coords, obj.coords)
    return n < 0 if isinstance(obj, Point) else n > 0


def is_exterior(obj: ProjObject) -> bool:
    _require_rational(obj)
    n = form_int(obj.coords, obj.coords)
    return n > 0 if isinstance(obj, Point) else n < 0


# -- duality and perpendicularity ----------------------------------------------------

def dual_of_point(a: Point) -> Line:
    return a.dual()


def dual_of_line(L: Line) -> Point:
    return L.dual()


def dual(obj):
    return obj.dual()


def perp_points(a: Point, b: Point) -> bool:
    return incident(b, a.dual())


def perp_lines(L: Line, M: Line) -> bool:
    return incident(M.dual(), L)


def perp(u: ProjObject, v: ProjObject) -> bool:
    if isinstance(u, Point) and isinstance(v, Point):
        return perp_points(u, v)
    if isinstance(u, Line) and isinstance(v, Line):
        return perp_lines(u, v)
    raise TypeError("perpendicularity relates two points or two lines")


# -- pairs of objects -----------------------------------------------------------------

@dataclass(frozen=True)
class Side:
    a1: Point
    a2: Point

    def __post_init__(self):
        if self.a1 == self.a2:
            raise DegenerateSide("a side needs two distinct points")

    @property
    def join(self) -> Line:
        return join(self.a1, self.a2)

    @property
    def is_null(self) -> bool:
        return is_null(self.join)

    @property
    def is_nil(self) -> bool:
        return is_null(self.a1) or is_null(self.a2)

    @property
    def is_right(self) -> bool:
        return perp_points(self.a1, self.a2)


@dataclass(frozen=True)
class Vertex:
    L1: Line
    L2: Line

    def __post_init__(self):
        if self.L1 == self.L2:
            raise DegenerateVertex("a vertex needs two distinct lines")

    @property
    def meet(self) -> Point:
        return meet(self.L1, self.L2)

    @property
    def is_null(self) -> bool:
        return is_null(self.meet)

    @property
    def is_nil(self) -> bool:
        return is_null(self.L1) or is_null(self.L2)


@dataclass(frozen=True)
class Couple:
    a: Point
    L: Line

    @property
    def is_dual(self) -> bool:
        return self.a.dual() == self.L


# -- couple constructions ---------------------------------------------------------------

def _check_couple(a: Point, L: Line):
    if a.dual() == L:
        raise DualCouple(f"{a} and {L} are dual")


def altitude_line(a: Point, L: Line) -> Line:
    """The line through ``a`` perpendicular to ``L``."""
    _check_couple(a, L)
    return join(a, L.dual())


def altitude_point(a: Point, L: Line) -> Point:
    """The point on ``L`` perpendicular to ``a``."""
    _check_couple(a, L)
    return meet(a.dual(), L)


def parallel_line(a: Point, L: Line) -> Line:
    _check_couple(a, L)
    try:
        return join(a, meet(a.dual(), L))
    except IdenticalArguments:
        raise DegenerateConfiguration(f"parallel undefined: {a} is null and on {L}") from None


def parallel_point(a: Point, L: Line) -> Point:
    _check_couple(a, L)
    try:
        return meet(a.dual(), join(a, L.dual()))
    except IdenticalArguments:
        raise DegenerateConfiguration(f"parallel point undefined for {a}, {L}") from None


def base_point(a: Point, L: Line) -> Point:
    """Foot of the altitude from ``a`` on ``L``."""
    try:
        return meet(altitude_line(a, L), L)
    except IdenticalArguments:
        raise DegenerateConfiguration(f"base point undefined for {a}, {L}") from None


def base_line(a: Point, L: Line) -> Line:
    try:
        return join(altitude_point(a, L), L.dual())
    except IdenticalArguments:
        raise DegenerateConfiguration(f"base line undefined for {a}, {L}") from None


# -- conjugates ---------------------------------------------------------------------------

def conjugate_points(a1: Point, a2: Point) -> tuple[Point, Point]:
    """``b_i = (a1 a2) a_i^perp``: the points of the join perpendicular to each member."""
    L = join(a1, a2)
    if is_null(L) and (is_null(a1) or is_null(a2)):
        raise NilNullSide(f"side {a1}{a2} is both nil and null")
    return meet(L, a1.dual()), meet(L, a2.dual())


def conjugate_lines(L1: Line, L2: Line) -> tuple[Line, Line]:
    p = meet(L1, L2)
    if is_null(p) and (is_null(L1) or is_null(L2)):
        raise NilNullSide(f"vertex {L1}{L2} is both nil and null")
    return join(p, L1.dual()), join(p, L2.dual())


# -- null points ----------------------------------------------------------------------------

def null_points_on(L: Line) -> list[Point]:
    """The null points of ``L`` (two, one for a null line, or none)."""
    ctx = L.ctx
    P, Q = points_on(L)
    u, v = P.coords, Q.coords
    A, B, C = form_int(u, u), form_int(u, v), form_int(v, v)
    disc = ctx(B * B - A * C)
    r = ctx.sqrt(disc)
    if r is None:
        return []
    rn, rd = ctx.int_pair(r)
    out = set()
    if not ctx.is_zero_int(A):
        # roots (s, t) = (-B*rd +- rn, A*rd)
        for sign in (1, -1):
            s, t = -B * rd + sign * rn, A * rd
            out.add(Point._raw(ctx, tuple(s * a + t * b for a, b in zip(u, v))))
    else:
        out.add(P)
        if not ctx.is_zero_int(B):
            out.add(Point._raw(ctx, tuple(-C * a + 2 * B * b for a, b in zip(u, v))))
    return sorted(out)


def null_point_from_param(t, ctx: Optional[Field] = None) -> Point:
    """The null point ``[1-t^2 : 2t : 1+t^2]``; ``INF`` gives ``[-1:0:1]``."""
    if t is INF:
        return Point._raw(ctx, (-1, 0, 1)) if ctx else Point(-1, 0, 1)
    if ctx is None:
        from .field import context_of
        ctx = context_of(t)
    n, d = ctx.int_pair(t)
    return Point._raw(ctx, (d * d - n * n, 2 * n * d, d * d + n * n))


def other_null_point(alpha: Point, a: Point) -> Point:
    """The second null point on ``alpha a`` (``alpha`` itself on a null join)."""
    ctx = _same_ctx((alpha, a))
    u, v = alpha.coords, a.coords
    s, t = -form_int(v, v), 2 * form_int(u, v)
    w = tuple(s * x + t * y for x, y in zip(u, v))
    if all(ctx.is_zero_int(c) for c in w):
        raise DegenerateConfiguration(f"{a} coincides with the null point {alpha}")
    return Point._raw(ctx, w)


def polar_by_construction(a: Point, alpha: Point, gamma: Point) -> Line:
    """Dual line of ``a`` from two secants ``a alpha`` and ``a gamma`` of the null circle."""
    beta = other_null_point(alpha, a)
    delta = other_null_point(gamma, a)
    if len({alpha, beta, gamma, delta}) < 4:
        raise DegenerateConfiguration("secants must meet the null circle in four points")
    d = meet(join(alpha, gamma), join(beta, delta))
    e = meet(join(alpha, delta), join(beta, gamma))
    return join(d, e)


# -- reflections -------------------------------------------------------------------------------

def reflection_matrix(a: Point):
    """Integer matrix of the reflection in ``a = [u:v:w]``, acting on row vectors.

    ``[x:y:z] -> [x:y:z] @ M``.
    """
    if is_null(a):
        raise NullMirror(f"reflection in the null point {a}")
    u, v, w = a.coords
    return (
        (u * u - v * v + w * w, 2 * u * v, 2 * u * w),
        (2 * u * v, -u * u + v * v + w * w, 2 * v * w),
        (-2 * u * w, -2 * v * w, -u * u - v * v - w * w),
    )


def reflect_point(b: Point, a: Point) -> Point:
    """Image of ``b`` under the reflection in the non-null point ``a``."""
    ctx = _same_ctx((a, b))
    M = reflection_matrix(a)
    x = b.coords
    return Point._raw(ctx, tuple(sum(x[i] * M[i][j] for i in range(3)) for j in range(3)))


def reflect_line(M: Line, a: Point) -> Line:
    """Image of ``M`` under the reflection in ``a``, by transporting two of its points."""
    p, q = points_on(M)
    return join(reflect_point(p, a), reflect_point(q, a))


def reflect(obj: ProjObject, mirror: ProjObject):
    """Reflect a point or line in a mirror point, or in a mirror line via its dual."""
    a = mirror if isinstance(mirror, Point) else mirror.dual()
    if isinstance(obj, Point):
        return reflect_point(obj, a)
    return reflect_line(obj, a)


def _four_null_points(ctx: Field) -> list[Point]:
    out: list[Point] = []
    t = 0
    while len(out) < 4:
        out.append(null_point_from_param(ctx(t), ctx))
        t += 1
    return out


def reflect_point_via_null_points(b: Point, a: Point) -> Point:
    """Reflection in ``a`` fixed by its action on null points.

    Each null point ``alpha`` goes to the other null point on ``alpha a``; the
    projective map through four such pairs is then applied to ``b``.
    """
    ctx = _same_ctx((a, b))
    if is_null(a):
        raise NullMirror(f"reflection in the null point {a}")
    src = _four_null_points(ctx)
    dst = [other_null_point(al, a) for al in src]
    H = _linalg.fit_projective(
        [al.elements() for al in src], [be.elements() for be in dst]
    )
    return Point(*_linalg.matvec(H, b.elements()), ctx=ctx)


def _other_null_line(Pi: Line, A: Line) -> Line:
    # Pi is tangent at alpha; the second tangent through A Pi touches the
    # other null point of the dual of that meet.
    alpha = Pi.dual()
    p = meet(A, Pi)
    if is_null(p):
        return Pi
    P = p.dual()
    u = next(q for q in points_on(P) if q != alpha)
    return other_null_point(alpha, u).dual()


def reflect_point_in_line(b: Point, A: Line) -> Point:
    """Reflection in the line ``A``, fixed by its action on null lines.

    Each null line ``Pi`` goes to the other null line through ``A Pi``; the
    image of ``b`` is the meet of the images of two lines through ``b``.
    """
    ctx = _same_ctx((A, b))
    if is_null(A):
        raise NullMirror(f"reflection in the null line {A}")
    src = [al.dual() for al in _four_null_points(ctx)]
    dst = [_other_null_line(Pi, A) for Pi in src]
    H = _linalg.fit_projective(
        [L.elements() for L in src], [L.elements() for L in dst]
    )
    images = []
    for L in _lines_through(b):
        images.append(Line(*_linalg.matvec(H, L.elements()), ctx=ctx))
    return meet(*images)


def _lines_through(b: Point) -> tuple[Line, Line]:
    p, q = points_on(b.dual())
    return p.dual(), q.dual()


# -- midpoints and bilines -----------------------------------------------------------------------

def _side_checks(b: Point, c: Point):
    if b == c:
        raise DegenerateSide("coincident points")
    if is_null(b) or is_null(c):
        raise DegenerateSide("nil side")
    if is_null(join(b, c)):
        raise DegenerateSide("null side")


def midpoints(b: Point, c: Point) -> Optional[tuple[Point, Point]]:
    """The two midpoints of the side ``bc``, or ``None`` when the field lacks them.

    With ``r^2 = <b,b><c,c>`` they are ``r b +- <b,b> c``.
    """
    _side_checks(b, c)
    ctx = _same_ctx((b, c))
    bb = form_int(b.coords, b.coords)
    cc = form_int(c.coords, c.coords)
    r = ctx.sqrt(ctx(bb * cc))
    if r is None:
        return None
    rn, rd = ctx.int_pair(r)
    pts = []
    for sign in (1, -1):
        w = tuple(rn * x + sign * rd * bb * y for x, y in zip(b.coords, c.coords))
        pts.append(Point._raw(ctx, w))
    d, e = sorted(pts)
    return d, e


def midpoints_by_construction(b: Point, c: Point) -> Optional[tuple[Point, Point]]:
    """Midpoints as the diagonal points of a nil quadrangle.

    Joins ``b`` and ``c`` to ``a = (bc)^perp``; when both joins meet the null
    circle twice the two diagonal points other than ``a`` are returned.
    """
    _side_checks(b, c)
    a = join(b, c).dual()
    mus = null_points_on(join(b, a))
    nus = null_points_on(join(c, a))
    if len(mus) != 2 or len(nus) != 2:
        return None
    (m1, m2), (n1, n2) = mus, nus
    d = meet(join(m1, n1), join(m2, n2))
    e = meet(join(m1, n2), join(m2, n1))
    d, e = sorted((d, e))
    return d, e


def midlines(b: Point, c: Point) -> Optional[tuple[Line, Line]]:
    m = midpoints(b, c)
    return None if m is None else (m[0].dual(), m[1].dual())


def bipoints(M: Line, N: Line) -> Optional[tuple[Point, Point]]:
    if M == N:
        raise DegenerateVertex("coincident lines")
    try:
        return midpoints(M.dual(), N.dual())
    except DegenerateSide as exc:
        raise DegenerateVertex(str(exc)) from None


def bilines(M: Line, N: Line) -> Optional[tuple[Line, Line]]:
    m = bipoints(M, N)
    return None if m is None else (m[0].dual(), m[1].dual())


def midpoints_or_bilines(u: ProjObject, v: ProjObject):
    if isinstance(u, Point) and isinstance(v, Point):
        return midpoints(u, v)
    if isinstance(u, Line) and isinstance(v, Line):
        return bilines(u, v)
    raise TypeError("midpoints need two points (or two lines for bilines)")


Obj = Union[Point, Line]
