"""Quadrance, spread, quadrea and the basic trigonometric laws.

Laws are exposed as residuals (left side minus right side) so that a
violation comes with the offending value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

from .duality import conjugate_lines, conjugate_points, form_int, is_null
from .errors import (
    CollinearPoints,
    DegenerateDenominator,
    DegenerateQuadruple,
    HypothesisViolated,
    Inconsistent,
    NullArgument,
    ZeroSpread,
)
from .field import Element
from .projective import (
    INF,
    Line,
    Point,
    _same_ctx,
    collinear,
    cross_ratio,
    join,
)


def _measure(u, v, kind: str):
    ctx = _same_ctx((u, v))
    uu = form_int(u.coords, u.coords)
    vv = form_int(v.coords, v.coords)
    if ctx.is_zero_int(uu) or ctx.is_zero_int(vv):
        raise NullArgument(f"{kind} with a null argument: {u}, {v}")
    uv = form_int(u.coords, v.coords)
    return ctx.frac(uu * vv - uv * uv, uu * vv)


def quadrance(a1: Point, a2: Point) -> Element:
    """``1 - <a1,a2>^2 / (<a1,a1><a2,a2>)`` for non-null points."""
    return _measure(a1, a2, "quadrance")


def spread(L1: Line, L2: Line) -> Element:
    """``1 - <L1,L2>^2 / (<L1,L1><L2,L2>)`` for non-null lines."""
    return _measure(L1, L2, "spread")


def quadrance_cr(a1: Point, a2: Point) -> Element:
    """Quadrance as the cross-ratio ``(a1, b2 : a2, b1)`` with the conjugate points."""
    if is_null(a1) or is_null(a2):
        raise NullArgument(f"quadrance with a null argument: {a1}, {a2}")
    if a1 == a2:
        return a1.ctx.zero
    b1, b2 = conjugate_points(a1, a2)
    value = cross_ratio(a1, b2, a2, b1)
    if value is INF:
        raise DegenerateQuadruple("quadrance cross-ratio is infinite")
    return value


def spread_cr(L1: Line, L2: Line) -> Element:
    """Spread as the cross-ratio ``(L1, B2 : L2, B1)`` with the conjugate lines."""
    if is_null(L1) or is_null(L2):
        raise NullArgument(f"spread with a null argument: {L1}, {L2}")
    if L1 == L2:
        return L1.ctx.zero
    B1, B2 = conjugate_lines(L1, L2)
    value = cross_ratio(L1, B2, L2, B1)
    if value is INF:
        raise DegenerateQuadruple("spread cross-ratio is infinite")
    return value


class Residual(NamedTuple):
    law: str
    value: Element

    @property
    def ok(self) -> bool:
        return self.value == 0


def spread_equals_dual_quadrance(L1: Line, L2: Line) -> Residual:
    return Residual("spread_dual_quadrance", spread(L1, L2) - quadrance(L1.dual(), L2.dual()))


@dataclass(frozen=True)
class TriangleMetrics:
    q1: Element
    q2: Element
    q3: Element
    S1: Element
    S2: Element
    S3: Element
    quadrea: Element

    @property
    def quadrances(self):
        return (self.q1, self.q2, self.q3)

    @property
    def spreads(self):
        return (self.S1, self.S2, self.S3)


def triangle_lines(a1: Point, a2: Point, a3: Point) -> tuple[Line, Line, Line]:
    """``L1 = a2a3``, ``L2 = a1a3``, ``L3 = a1a2``."""
    return join(a2, a3), join(a1, a3), join(a1, a2)


def triangle_metrics(a1: Point, a2: Point, a3: Point) -> TriangleMetrics:
    if collinear(a1, a2, a3):
        raise CollinearPoints(f"{a1}, {a2}, {a3} are collinear")
    L1, L2, L3 = triangle_lines(a1, a2, a3)
    q1, q2, q3 = quadrance(a2, a3), quadrance(a1, a3), quadrance(a1, a2)
    S1, S2, S3 = spread(L2, L3), spread(L1, L3), spread(L1, L2)
    return TriangleMetrics(q1, q2, q3, S1, S2, S3, S1 * q2 * q3)


def quadrea(a1: Point, a2: Point, a3: Point) -> Element:
    return triangle_metrics(a1, a2, a3).quadrea


def collinear_quadrances(a1: Point, a2: Point, a3: Point):
    """``(q1, q2, q3)`` for three collinear points (the triple quad input)."""
    if not collinear(a1, a2, a3):
        raise HypothesisViolated("points are not collinear")
    return quadrance(a2, a3), quadrance(a1, a3), quadrance(a1, a2)


def concurrent_spreads(L1: Line, L2: Line, L3: Line):
    from .projective import concurrent

    if not concurrent(L1, L2, L3):
        raise HypothesisViolated("lines are not concurrent")
    return spread(L2, L3), spread(L1, L3), spread(L1, L2)


# -- laws -------------------------------------------------------------------------------


def _triple(a, b, c):
    return (a + b + c) ** 2 - 2 * (a * a + b * b + c * c) - 4 * a * b * c


def _first_nonzero(*values):
    for v in values:
        if v != 0:
            return v
    return values[0]


def law_residual(law: str, m: Union[TriangleMetrics, Sequence]) -> Residual:
    """Residual of a named law on triangle metrics (or a bare triple).

    ``triple_quad`` and ``triple_spread`` take a triple of quadrances or
    spreads; the others take :class:`TriangleMetrics`.  Laws with a
    hypothesis (``pythagoras``: ``S3 = 1``; ``pythagoras_dual``: ``q3 = 1``)
    raise :class:`HypothesisViolated` when it fails.
    """
    if law in ("triple_quad", "triple_spread"):
        a, b, c = m if not isinstance(m, TriangleMetrics) else (
            m.quadrances if law == "triple_quad" else m.spreads
        )
        return Residual(law, _triple(a, b, c))
    if not isinstance(m, TriangleMetrics):
        raise TypeError(f"{law} needs TriangleMetrics")
    q1, q2, q3 = m.quadrances
    S1, S2, S3 = m.spreads
    if law == "pythagoras":
        if S3 != 1:
            raise HypothesisViolated("Pythagoras needs S3 = 1")
        return Residual(law, q3 - (q1 + q2 - q1 * q2))
    if law == "pythagoras_dual":
        if q3 != 1:
            raise HypothesisViolated("the dual of Pythagoras needs q3 = 1")
        return Residual(law, S3 - (S1 + S2 - S1 * S2))
    if law == "spread_law":
        return Residual(law, _first_nonzero(S1 * q2 - S2 * q1, S2 * q3 - S3 * q2, S1 * q3 - S3 * q1))
    if law == "spread_dual_law":
        return Residual(law, _first_nonzero(q1 * S2 - q2 * S1, q2 * S3 - q3 * S2, q1 * S3 - q3 * S1))
    if law == "cross_law":
        lhs = (q1 * q2 * S3 - (q1 + q2 + q3) + 2) ** 2
        return Residual(law, lhs - 4 * (1 - q1) * (1 - q2) * (1 - q3))
    if law == "cross_dual":
        lhs = (S1 * S2 * q3 - (S1 + S2 + S3) + 2) ** 2
        return Residual(law, lhs - 4 * (1 - S1) * (1 - S2) * (1 - S3))
    raise KeyError(f"unknown law {law!r}")


LAWS = (
    "triple_quad",
    "triple_spread",
    "pythagoras",
    "pythagoras_dual",
    "spread_law",
    "spread_dual_law",
    "cross_law",
    "cross_dual",
)


# -- right triangles ---------------------------------------------------------------------


def thales_ratios(m: TriangleMetrics) -> tuple[Residual, Residual]:
    if m.S3 != 1:
        raise HypothesisViolated("Thales needs S3 = 1")
    if m.q3 == 0:
        raise HypothesisViolated("Thales needs q3 != 0")
    return (
        Residual("thales_1", m.S1 * m.q3 - m.q1),
        Residual("thales_2", m.S2 * m.q3 - m.q2),
    )


def right_parallax(S: Element) -> Element:
    """``q = (S - 1) / S``."""
    if S == 0:
        raise ZeroSpread("right parallax needs S != 0")
    return (S - 1) / S


NAPIER_QUANTITIES = ("S1", "S2", "q1", "q2", "q3")


def _div(a, b, what):
    if b == 0:
        raise DegenerateDenominator(f"zero denominator solving for {what}")
    return a / b


def napier_solve(**known) -> dict:
    """Complete a right triangle (``S3 = 1``) from any two of S1, S2, q1, q2, q3.

    Uses only ``S1 = q1/q3``, ``S2 = q2/q3`` and ``q3 = q1 + q2 - q1 q2``;
    every case is rational.
    """
    if len(known) != 2 or not set(known) <= set(NAPIER_QUANTITIES):
        raise ValueError(f"give exactly two of {NAPIER_QUANTITIES}")
    k = dict(known)
    S1, S2 = k.get("S1"), k.get("S2")
    q1, q2, q3 = k.get("q1"), k.get("q2"), k.get("q3")
    pair = frozenset(k)

    def other_leg(qa, qc, what):
        # q3 = qa + qb (1 - qa)
        return _div(qc - qa, 1 - qa, what)

    if pair == {"q1", "q2"}:
        q3 = q1 + q2 - q1 * q2
    elif pair == {"q1", "q3"}:
        q2 = other_leg(q1, q3, "q2")
    elif pair == {"q2", "q3"}:
        q1 = other_leg(q2, q3, "q1")
    elif pair == {"S1", "q3"}:
        q1 = S1 * q3
        q2 = other_leg(q1, q3, "q2")
    elif pair == {"S2", "q3"}:
        q2 = S2 * q3
        q1 = other_leg(q2, q3, "q1")
    elif pair == {"S1", "q1"}:
        q3 = _div(q1, S1, "q3")
        q2 = other_leg(q1, q3, "q2")
    elif pair == {"S2", "q2"}:
        q3 = _div(q2, S2, "q3")
        q1 = other_leg(q2, q3, "q1")
    elif pair == {"S1", "q2"}:
        q3 = _div(q2, 1 - S1 + S1 * q2, "q3")
        q1 = S1 * q3
    elif pair == {"S2", "q1"}:
        q3 = _div(q1, 1 - S2 + S2 * q1, "q3")
        q2 = S2 * q3
    elif pair == {"S1", "S2"}:
        q3 = _div(S1 + S2 - 1, S1 * S2, "q3")
        q1, q2 = S1 * q3, S2 * q3
    if S1 is None:
        S1 = _div(q1, q3, "S1")
    if S2 is None:
        S2 = _div(q2, q3, "S2")
    out = {"S1": S1, "S2": S2, "q1": q1, "q2": q2, "q3": q3}
    if q3 == 0 or S1 * q3 != q1 or S2 * q3 != q2 or q3 != q1 + q2 - q1 * q2:
        raise Inconsistent(f"no right triangle with {known}")
    return out
