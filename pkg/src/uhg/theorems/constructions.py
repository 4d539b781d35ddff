"""Named constructions: triangle centers, circles, parabolas and null-point figures."""
from __future__ import annotations

import itertools
from typing import Optional

from ..duality import (
    altitude_line,
    altitude_point,
    base_point,
    form_int,
    is_null,
    midlines,
    midpoints,
    null_points_on,
    parallel_line,
    reflect_point,
)
from ..errors import (
    DegenerateAux,
    DegenerateConfiguration,
    DegenerateCouple,
    DegenerateDouble,
    DualCouple,
    DualTriangle,
    ExteriorLine,
    IdenticalArguments,
    MidlinesAbsent,
    MidpointsAbsent,
    NoIntersection,
    NoNullPointsOnJoin,
    NullCenter,
    ZeroSpread,
)
from ..field import Element
from ..metric import Residual, quadrance
from ..projective import (
    Line,
    Point,
    _same_ctx,
    collinear,
    concurrent,
    incident,
    join,
    meet,
    points_on,
)


def _meet(L, M, what="meet"):
    try:
        return meet(L, M)
    except IdenticalArguments:
        raise DegenerateConfiguration(f"{what}: coincident lines {L}") from None


def _join(a, b, what="join"):
    try:
        return join(a, b)
    except IdenticalArguments:
        raise DegenerateConfiguration(f"{what}: coincident points {a}") from None


# -- orthocenter ------------------------------------------------------------------------


def altitudes(a1: Point, a2: Point, a3: Point) -> tuple[Line, Line, Line]:
    sides = (join(a2, a3), join(a1, a3), join(a1, a2))
    try:
        return tuple(altitude_line(a, L) for a, L in zip((a1, a2, a3), sides))  # type: ignore[return-value]
    except DualCouple as exc:
        raise DualTriangle(str(exc)) from None


def orthocenter(a1: Point, a2: Point, a3: Point) -> Point:
    """Meet of the three altitude lines (which are concurrent)."""
    if collinear(a1, a2, a3):
        raise DegenerateConfiguration("orthocenter of collinear points")
    N1, N2, N3 = altitudes(a1, a2, a3)
    for A, B in ((N1, N2), (N1, N3), (N2, N3)):
        if A != B:
            return meet(A, B)
    raise DegenerateConfiguration("all altitudes coincide")


def ortholine(L1: Line, L2: Line, L3: Line) -> Line:
    """Join of the three altitude points of a trilateral (which are collinear)."""
    if concurrent(L1, L2, L3):
        raise DegenerateConfiguration("ortholine of concurrent lines")
    pts = (meet(L2, L3), meet(L1, L3), meet(L1, L2))
    try:
        ns = [altitude_point(p, L) for p, L in zip(pts, (L1, L2, L3))]
    except DualCouple as exc:
        raise DualTriangle(str(exc)) from None
    for p, q in ((ns[0], ns[1]), (ns[0], ns[2]), (ns[1], ns[2])):
        if p != q:
            return join(p, q)
    raise DegenerateConfiguration("all altitude points coincide")


# -- circumlines ---------------------------------------------------------------------------------


def six_midpoints(a1: Point, a2: Point, a3: Point):
    """Midpoint pairs of the sides ``a2a3``, ``a1a3``, ``a1a2``."""
    out = []
    for i, (p, q) in enumerate(((a2, a3), (a1, a3), (a1, a2)), start=1):
        m = midpoints(p, q)
        if m is None:
            raise MidpointsAbsent(f"side {i} ({p}, {q}) has no midpoints")
        out.append(m)
    return out


def circumcenters(a1: Point, a2: Point, a3: Point):
    """``(circumlines, circumcenters)``.

    A circumline is the join of three midpoints, one from each side, when
    they are collinear; the circumcenters are the dual points.
    """
    mids = six_midpoints(a1, a2, a3)
    lines: list[Line] = []
    for m1, m2, m3 in itertools.product(*mids):
        if collinear(m1, m2, m3) and m1 != m2:
            C = join(m1, m2)
            if C not in lines:
                lines.append(C)
    lines.sort()
    return lines, [C.dual() for C in lines]


def pascal_configuration(alphas):
    """Triangle of dual points of three chords through six null points.

    Returns ``(a_points, midpoint pairs from the quadrangles)``: for each pair
    of chords the two diagonal points of their four null points other than
    the meet of the chords.
    """
    pairs = [(alphas[0], alphas[1]), (alphas[2], alphas[3]), (alphas[4], alphas[5])]
    chords = [join(p, q) for p, q in pairs]
    a = [C.dual() for C in chords]
    diag = []
    for i, j in ((1, 2), (0, 2), (0, 1)):
        (p1, p2), (q1, q2) = pairs[i], pairs[j]
        d = _meet(join(p1, q1), join(p2, q2))
        e = _meet(join(p1, q2), join(p2, q1))
        diag.append(tuple(sorted((d, e))))
    return a, diag


# -- double triangle -------------------------------------------------------------------------------


def double_triangle(a1: Point, a2: Point, a3: Point) -> tuple[Point, Point, Point]:
    """Meets of the parallels through each point to its opposite side."""
    sides = (join(a2, a3), join(a1, a3), join(a1, a2))
    try:
        P1, P2, P3 = (parallel_line(a, L) for a, L in zip((a1, a2, a3), sides))
        return meet(P2, P3), meet(P1, P3), meet(P1, P2)
    except (DualCouple, DegenerateConfiguration, IdenticalArguments) as exc:
        raise DegenerateDouble(str(exc)) from None


def _concurrence_point(L1: Line, L2: Line, L3: Line) -> Point:
    if not concurrent(L1, L2, L3):
        raise AssertionError("lines are not concurrent")
    for A, B in ((L1, L2), (L1, L3), (L2, L3)):
        if A != B:
            return meet(A, B)
    raise DegenerateDouble("the three joins coincide")


def _cevians(a, d):
    try:
        return tuple(join(p, q) for p, q in zip(a, d))
    except IdenticalArguments as exc:
        raise DegenerateDouble(str(exc)) from None


def double_point(a1: Point, a2: Point, a3: Point) -> Point:
    d = double_triangle(a1, a2, a3)
    return _concurrence_point(*_cevians((a1, a2, a3), d))


def second_double_point(a1: Point, a2: Point, a3: Point) -> Point:
    d = double_triangle(a1, a2, a3)
    if collinear(*d):
        raise DegenerateDouble("double triangle is degenerate")
    g = double_triangle(*d)
    return _concurrence_point(*_cevians((a1, a2, a3), g))


# -- circles ------------------------------------------------------------------------------------------


def circle_conic(a: Point, k) -> tuple:
    """Coefficients ``(A, B, C, D, E, F)`` of the circle ``q(x, a) = k``.

    The form is ``<x,a>^2 - (1-k)<a,a><x,x>`` written as
    ``A x^2 + B y^2 + C z^2 + 2D xy + 2E xz + 2F yz``.
    """
    ctx = a.ctx
    if is_null(a):
        raise NullCenter(f"circle centered at the null point {a}")
    k = ctx(k)
    u, v, w = a.elements()
    ja = (u, v, -w)
    aa = u * u + v * v - w * w
    c = (1 - k) * aa
    J = (1, 1, -1)
    m = [[ja[i] * ja[j] - (c * J[i] if i == j else 0) for j in range(3)] for i in range(3)]
    return (m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2])


def conic_form_value(coeffs, x: Point):
    A, B, C, D, E, F = coeffs
    p, q, r = x.elements()
    return A * p * p + B * q * q + C * r * r + 2 * (D * p * q + E * p * r + F * q * r)


def circle_meets_line(a: Point, k, N: Line) -> list[Point]:
    """Points of ``N`` on the circle ``q(x, a) = k`` (zero, one or two)."""
    ctx = _same_ctx((a, N))
    coeffs = circle_conic(a, k)
    P, Q = points_on(N)
    p, q = P.elements(), Q.elements()
    A, B, C, D, E, F = coeffs
    M = ((A, D, E), (D, B, F), (E, F, C))

    def bil(x, y):
        return sum(M[i][j] * x[i] * y[j] for i in range(3) for j in range(3))

    # form(s p + t q) = s^2 pp + 2 s t pq + t^2 qq
    pp, pq, qq = bil(p, p), bil(p, q), bil(q, q)
    if pp == 0 and pq == 0 and qq == 0:
        raise DegenerateConfiguration("line lies on the circle")
    disc = pq * pq - pp * qq
    r = ctx.sqrt(disc)
    if r is None:
        raise NoIntersection(f"circle misses {N} over {ctx!r}")
    out = set()
    if pp != 0:
        for sgn in (1, -1):
            s, t = -pq + sgn * r, pp
            out.add(Point(*(s * x + t * y for x, y in zip(p, q)), ctx=ctx))
    else:
        out.add(P)
        if pq != 0:
            out.add(Point(*(-qq * x + 2 * pq * y for x, y in zip(p, q)), ctx=ctx))
    return sorted(out)


# -- parabola -------------------------------------------------------------------------------------------


def parabola_points(f1: Point, D1: Line, b1: Point):
    """The two parabola points over ``b1`` and their tangents.

    Returns ``((a, a'), (T, T'))`` where the tangents are the midlines of
    ``b1 f1`` and the points are their meets with the altitude to ``D1``
    through ``b1``; ``None`` when the midlines do not exist in the field.
    """
    if not incident(b1, D1):
        raise DegenerateCouple(f"{b1} is not on the directrix {D1}")
    if is_null(f1) or is_null(D1) or incident(f1, D1):
        raise DegenerateCouple("focus and directrix must be non-null and apart")
    if f1.dual() == D1:
        raise DegenerateCouple("focus is dual to the directrix")
    try:
        ms = midlines(b1, f1)
    except Exception as exc:
        raise DegenerateCouple(str(exc)) from None
    if ms is None:
        raise MidlinesAbsent(f"side ({b1}, {f1}) has no midlines")
    K = altitude_line(b1, D1)
    pts = tuple(_meet(T, K, "tangent meets altitude") for T in ms)
    return pts, ms


def parabola_pairing(f1: Point, D1: Line, b1: Point) -> dict:
    """Second focus/directrix pair and the perpendicular pairings of the points over ``b1``, ``b2``.

    ``b2 = (b1 f1)^perp`` lies on ``D2 = f1^perp``; the points over ``b2`` are
    built from ``f2 = D1^perp``.  ``perpendicular`` lists every index pair
    ``(i, j)`` with ``a1[i]`` perpendicular to ``a2[j]``, without assuming one.
    """
    from ..duality import perp_points

    a1, t1 = parabola_points(f1, D1, b1)
    b2 = _join(b1, f1).dual()
    f2, D2 = D1.dual(), f1.dual()
    a2, t2 = parabola_points(f2, D2, b2)
    return {
        "b2": b2, "f2": f2, "D2": D2, "a1": a1, "a2": a2, "tangents1": t1, "tangents2": t2,
        "perpendicular": [(i, j) for i in range(2) for j in range(2) if perp_points(a1[i], a2[j])],
    }


def parabola_locus_residuals(a: Point, f1: Point, D1: Line) -> tuple[Residual, Residual]:
    """Focus/directrix locus and the sum-of-two-quadrances law at ``a``."""
    b = base_point(a, D1)
    f2 = D1.dual()
    return (
        Residual("locus", quadrance(a, f1) - quadrance(a, b)),
        Residual("sum_of_quadrances", quadrance(a, f1) + quadrance(a, f2) - 1),
    )


def parabola_chord_residuals(a: Point, Ta: Line, b: Point, Tb: Line, f: Point, D: Line):
    """The chord spread and chord tangents perpendicular statements."""
    from ..duality import perp_lines
    from ..metric import spread

    c = _meet(D, Ta, "tangent at a meets directrix")
    d = _meet(D, Tb, "tangent at b meets directrix")
    chord_spread = spread(_join(c, f), _join(f, d)) - spread(_join(a, f), _join(f, b))
    e = _meet(D, _join(a, b), "chord meets directrix")
    g = _meet(Ta, Tb, "tangents meet")
    ef, gf = _join(e, f), _join(g, f)
    return Residual("chord_spread", chord_spread), perp_lines(ef, gf)


# -- Bolyai ----------------------------------------------------------------------------------------------


def bolyai_limiting_lines(a: Point, L: Line, b: Optional[Point] = None):
    """Limiting lines from ``a`` to the interior line ``L``.

    Altitude ``K`` meets ``L`` at ``c``; ``P`` is the parallel through ``a``;
    ``b`` on ``L`` is reflected in the midpoints of ``ac`` to ``d``, ``e`` on
    ``P``; the circle about ``a`` through ``d`` meets the altitude ``N`` from
    ``b`` to ``P`` at ``u``, ``v``.  Returns ``(U, V) = (au, av)``.
    """
    if len(null_points_on(L)) != 2:
        raise ExteriorLine(f"{L} does not meet the null circle twice")
    if a.dual() == L:
        raise DegenerateCouple("couple is dual")
    K = altitude_line(a, L)
    c = _meet(K, L)
    P = parallel_line(a, L)
    ms = midpoints(a, c)
    if ms is None:
        raise MidpointsAbsent(f"side ({a}, {c}) has no midpoints")
    if b is None:
        b = next(p for p in points_on(L) if p != c)
    N = altitude_line(b, P)
    d = reflect_point(b, ms[0])
    e = reflect_point(b, ms[1])
    if not (incident(d, P) and incident(e, P)):
        raise AssertionError("reflections of b must lie on the parallel")
    k = quadrance(a, d)
    if k != quadrance(a, e):
        raise AssertionError("a must be a midpoint of de")
    pts = circle_meets_line(a, k, N)
    if len(pts) != 2:
        raise NoIntersection("circle is tangent to the altitude")
    u, v = pts
    return _join(a, u), _join(a, v)


# -- canonical points ---------------------------------------------------------------------------------


def canonical_points(x3: Point, y3: Point, alpha3: Point, b1: Point, b2: Point):
    """Run the canonical points construction.

    ``alpha1``, ``alpha2`` are the null points of ``x3 y3``.  Returns a dict
    with every constructed point; ``b3`` is ``(x1 y2)(x2 y1)``.
    """
    try:
        L = join(x3, y3)
    except IdenticalArguments:
        raise DegenerateAux("x3 = y3") from None
    nulls = null_points_on(L)
    if len(nulls) != 2:
        raise NoNullPointsOnJoin(f"{L} does not pass through two null points")
    al1, al2 = nulls
    if alpha3 in nulls or not is_null(alpha3):
        raise DegenerateAux("alpha3 must be a third null point")
    try:
        A12, A13, A23 = L, join(al1, alpha3), join(al2, alpha3)
        if not (incident(b1, A23) and incident(b2, A13)):
            raise DegenerateAux("b1 must lie on alpha2 alpha3 and b2 on alpha1 alpha3")
        P: dict = {"alpha1": al1, "alpha2": al2, "alpha3": alpha3, "x3": x3, "y3": y3, "b1": b1, "b2": b2}
        P["x2"] = meet(A13, join(y3, b1))
        P["y2"] = meet(A13, join(x3, b1))
        P["x1"] = meet(A23, join(y3, b2))
        P["y1"] = meet(A23, join(x3, b2))
        x1, y1, x2, y2 = P["x1"], P["y1"], P["x2"], P["y2"]
        P["b3"] = meet(join(x1, y2), join(x2, y1))
        P["c1"] = meet(join(x2, x3), join(y2, y3))
        P["c2"] = meet(join(x1, x3), join(y1, y3))
        P["c3"] = meet(join(x1, x2), join(y1, y2))
        P["z3"] = meet(join(P["c1"], b1), A12)
        P["w2"] = meet(join(P["c1"], b1), A13)
        P["z1"] = meet(join(P["c2"], b2), A23)
        P["w3"] = meet(join(P["c2"], b2), A12)
        P["z2"] = meet(join(P["c3"], P["b3"]), A13)
        P["w1"] = meet(join(P["c3"], P["b3"]), A23)
    except IdenticalArguments as exc:
        raise DegenerateAux(str(exc)) from None
    return P


def canonical_cubic(q, r) -> Element:
    """``(q - 4r)^2 - 8qr(2r - q)``."""
    return (q - 4 * r) ** 2 - 8 * q * r * (2 * r - q)


# -- Jumping Jack --------------------------------------------------------------------------------------


def jumping_jack(alphas, L: Line):
    """``(r, s, residual)`` for null points ``alpha1..alpha5`` and ``L`` through ``g``."""
    a1, a2, a3, a4, a5 = alphas
    try:
        A13, A24 = join(a1, a3), join(a2, a4)
        g = meet(A13, A24)
        if not incident(g, L):
            raise DegenerateConfiguration("L must pass through the diagonal point")
        A45, A35 = join(a4, a5), join(a3, a5)
        x = meet(A13, A45)
        y = meet(L, A45)
        z = meet(A24, A35)
        w = meet(L, A35)
    except IdenticalArguments as exc:
        raise DegenerateConfiguration(str(exc)) from None
    r, s = quadrance(x, y), quadrance(z, w)
    return r, s, jumping_jack_cubic(r, s)


def jumping_jack_cubic(r, s) -> Element:
    """``16 r s (3 - 4(s + r)) - 1``."""
    return 16 * r * s * (3 - 4 * (s + r)) - 1


# -- 48/64 --------------------------------------------------------------------------------------------


def opposite_spreads(alphas):
    """Spreads ``(P, R, T)`` between the three pairs of opposite lines of a null quadrangle.

    ``P`` is the spread between the diagonals ``a1a3`` and ``a2a4``; ``R`` and
    ``T`` pair ``a1a2`` with ``a3a4`` and ``a1a4`` with ``a2a3``.
    """
    from ..metric import spread

    a1, a2, a3, a4 = alphas
    pairs = (((a1, a3), (a2, a4)), ((a1, a2), (a3, a4)), ((a1, a4), (a2, a3)))
    return tuple(spread(join(*p), join(*q)) for p, q in pairs)


def opposite_quadrances(lambdas):
    """Quadrances between the three pairs of opposite points of a null quadrilateral."""
    L1, L2, L3, L4 = lambdas
    pairs = (((L1, L3), (L2, L4)), ((L1, L2), (L3, L4)), ((L1, L4), (L2, L3)))
    return tuple(quadrance(meet(*p), meet(*q)) for p, q in pairs)


def reciprocal_sum_48(P, R, T) -> Residual:
    """``1/P + 1/R + 1/T - 3/4``."""
    if P == 0 or R == 0 or T == 0:
        raise ZeroSpread("reciprocal sum needs nonzero spreads")
    one = P / P
    return Residual("reciprocal_sum", one / P + one / R + one / T - 3 * one / 4)


def form_value(p: Point) -> int:
    return form_int(p.coords, p.coords)
