"""Theorem registry, per-trial checks and the :class:`CheckReport` tally.

A check receives a field context and a seeded RNG, builds a configuration
that satisfies the theorem's hypotheses, and returns ``(bindings, results)``
where each result is ``(label, ok, value)``.  Any :class:`DegenerateError`
or division by zero during a trial is a rejection; the trial is retried with
fresh randomness and recorded as a skip once the retry budget is spent.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..duality import (
    altitude_line,
    base_point,
    is_null,
    midpoints,
    midpoints_by_construction,
    null_points_on,
    perp_lines,
    perp_points,
    reflect_line,
    reflect_point,
    reflect_point_in_line,
    reflect_point_via_null_points,
)
from ..errors import DegenerateError, GeneratorExhausted, HypothesisViolated, MidpointsAbsent, UnknownTheorem
from ..field import Field
from ..metric import (
    law_residual,
    quadrance,
    quadrance_cr,
    spread,
    spread_cr,
    triangle_metrics,
)
from ..projective import (
    collinear,
    concurrent,
    cross_ratio,
    desargues_holds,
    incident,
    join,
    meet,
    pappus_holds,
)
from . import constructions as C
from . import generators as G
from .generators import MAX_REJECTIONS

Result = Tuple[str, bool, object]


def eq(label: str, lhs, rhs) -> Result:
    d = lhs - rhs
    return (label, d == 0, d)


def holds(label: str, ok: bool, value=None) -> Result:
    return (label, bool(ok), value)


@dataclass(frozen=True)
class Theorem:
    id: str
    check: Callable
    summary: str
    kind: str = "theorem"


REGISTRY: Dict[str, Theorem] = {}

# b3 = (x1 y2)(x2 y1) is the reading under which b3 lies on alpha1 alpha2
# identically; (x1 y1)(x2 y2) fails on random instances.
CANONICAL_B3_READING = "(x1y2)(x2y1)"


def register(id: str, summary: str, kind: str = "theorem"):
    def deco(fn):
        REGISTRY[id] = Theorem(id, fn, summary, kind)
        return fn
    return deco


def _nulls(ctx, rng, n):
    return G.random_null_points(ctx, rng, n)


def _need(cond: bool, why: str):
    if not cond:
        raise HypothesisViolated(why)


# -- null point theorems ---------------------------------------------------------------------


@register("triply_nil_altitudes", "altitudes from b on a1a2 to a1a3 and a2a3 are perpendicular")
def _triply_nil_altitudes(ctx, rng):
    a1, a2, a3 = _nulls(ctx, rng, 3)
    b = G.random_point_on(join(a1, a2), rng, allow_null=True)
    N1 = altitude_line(b, join(a1, a3))
    N2 = altitude_line(b, join(a2, a3))
    return dict(α1=a1, α2=a2, α3=a3, b=b, N1=N1, N2=N2), [holds("N1 ⊥ N2", perp_lines(N1, N2))]


@register("nil_quadrangle_diagonal", "diagonal triangle of a null quadrangle is triply right")
def _nil_quadrangle_diagonal(ctx, rng):
    a1, a2, a3, a4 = _nulls(ctx, rng, 4)
    e = meet(join(a1, a2), join(a3, a4))
    f = meet(join(a1, a3), join(a2, a4))
    g = meet(join(a1, a4), join(a2, a3))
    ef, eg, fg = join(e, f), join(e, g), join(f, g)
    res = [
        holds("e ⊥ f", perp_points(e, f)),
        holds("e ⊥ g", perp_points(e, g)),
        holds("f ⊥ g", perp_points(f, g)),
        holds("ef ⊥ eg", perp_lines(ef, eg)),
        holds("ef ⊥ fg", perp_lines(ef, fg)),
        holds("eg ⊥ fg", perp_lines(eg, fg)),
    ]
    return dict(α1=a1, α2=a2, α3=a3, α4=a4, e=e, f=f, g=g), res


# -- proportions, Menelaus, Ceva --------------------------------------------------------------


@register("triangle_proportions", "R1/R2 = (S1/S2)(r1/r2) = (q1/q2)(r1/r2)")
def _triangle_proportions(ctx, rng):
    a1, a2, a3 = G.random_triangle(ctx, rng)
    d = G.random_point_on(join(a1, a2), rng, avoid=(a1, a2))
    m = triangle_metrics(a1, a2, a3)
    r1, r2 = quadrance(a1, d), quadrance(a2, d)
    a3d = join(a3, d)
    R1, R2 = spread(join(a3, a1), a3d), spread(join(a3, a2), a3d)
    res = [
        eq("R1 S2 r2 = R2 S1 r1", R1 * m.S2 * r2, R2 * m.S1 * r1),
        eq("R1 q2 r2 = R2 q1 r1", R1 * m.q2 * r2, R2 * m.q1 * r1),
    ]
    return dict(a1=a1, a2=a2, a3=a3, d=d), res


def _menelaus_products(a1, a2, a3, b1, b2, b3, measure):
    r = measure(a2, b1) * measure(a3, b2) * measure(a1, b3)
    t = measure(b1, a3) * measure(b2, a1) * measure(b3, a2)
    return r, t


@register("menelaus", "r1 r2 r3 = t1 t2 t3 for a transversal")
def _menelaus(ctx, rng):
    a1, a2, a3 = G.random_triangle(ctx, rng)
    L = G.random_line(ctx, rng)
    b1, b2, b3 = meet(L, join(a2, a3)), meet(L, join(a1, a3)), meet(L, join(a1, a2))
    r, t = _menelaus_products(a1, a2, a3, b1, b2, b3, quadrance)
    return dict(a1=a1, a2=a2, a3=a3, L=L, b1=b1, b2=b2, b3=b3), [eq("r1r2r3 = t1t2t3", r, t)]


@register("menelaus_dual", "R1 R2 R3 = T1 T2 T3 for a point and a trilateral")
def _menelaus_dual(ctx, rng):
    A1, A2, A3 = (p.dual() for p in G.random_triangle(ctx, rng))
    l = G.random_point(ctx, rng)
    B1, B2, B3 = join(l, meet(A2, A3)), join(l, meet(A1, A3)), join(l, meet(A1, A2))
    R, T = _menelaus_products(A1, A2, A3, B1, B2, B3, spread)
    return dict(A1=A1, A2=A2, A3=A3, l=l, B1=B1, B2=B2, B3=B3), [eq("R1R2R3 = T1T2T3", R, T)]


@register("ceva", "r1 r2 r3 = t1 t2 t3 for concurrent cevians")
def _ceva(ctx, rng):
    a1, a2, a3 = G.random_triangle(ctx, rng)
    a0 = G.random_point(ctx, rng, allow_null=True)
    _need(a0 not in (a1, a2, a3), "a0 must differ from the vertices")
    b1 = meet(join(a0, a1), join(a2, a3))
    b2 = meet(join(a0, a2), join(a1, a3))
    b3 = meet(join(a0, a3), join(a1, a2))
    r, t = _menelaus_products(a1, a2, a3, b1, b2, b3, quadrance)
    return dict(a0=a0, a1=a1, a2=a2, a3=a3, b1=b1, b2=b2, b3=b3), [eq("r1r2r3 = t1t2t3", r, t)]


@register("ceva_dual", "R1 R2 R3 = T1 T2 T3 for collinear cevian points")
def _ceva_dual(ctx, rng):
    A1, A2, A3 = (p.dual() for p in G.random_triangle(ctx, rng))
    A0 = G.random_line(ctx, rng, allow_null=True)
    _need(A0 not in (A1, A2, A3), "A0 must differ from the lines")
    B1 = join(meet(A0, A1), meet(A2, A3))
    B2 = join(meet(A0, A2), meet(A1, A3))
    B3 = join(meet(A0, A3), meet(A1, A2))
    R, T = _menelaus_products(A1, A2, A3, B1, B2, B3, spread)
    return dict(A0=A0, A1=A1, A2=A2, A3=A3, B1=B1, B2=B2, B3=B3), [eq("R1R2R3 = T1T2T3", R, T)]


# -- isosceles and equilateral ----------------------------------------------------------------


@register("pons_asinorum", "q1 = q2 exactly when S1 = S2")
def _pons_asinorum(ctx, rng):
    a1, a2, a3 = G.isosceles_triangle(ctx, rng)
    m = triangle_metrics(a1, a2, a3)
    # the dual trilateral has equal spreads; its triangle must have equal quadrances
    L = (join(a2, a3).dual(), join(a1, a3).dual(), join(a1, a2).dual())
    dm = triangle_metrics(*L)
    r1, r2, r3 = G.random_triangle(ctx, rng)
    rm = triangle_metrics(r1, r2, r3)
    res = [
        eq("q1 = q2 ⇒ S1 = S2", m.S1, m.S2),
        eq("S1 = S2 ⇒ q1 = q2", dm.q1, dm.q2),
        holds("random: (q1 = q2) ⇔ (S1 = S2)", (rm.q1 == rm.q2) == (rm.S1 == rm.S2)),
    ]
    return dict(a1=a1, a2=a2, a3=a3, d1=L[0], d2=L[1], d3=L[2], r1=r1, r2=r2, r3=r3), res


@register("isosceles_right", "S1 = S2 = 1 gives q1 = q2 = 1 and S3 = q3")
def _isosceles_right(ctx, rng):
    a1 = G.random_point(ctx, rng)
    a2 = G.random_point(ctx, rng)
    _need(a1 != a2, "distinct base points")
    a3 = join(a1, a2).dual()
    _need(G.is_generic_triangle(a1, a2, a3), "generic triangle")
    m = triangle_metrics(a1, a2, a3)
    _need(m.S1 == 1 and m.S2 == 1, "two right spreads")
    res = [eq("q1 = 1", m.q1, 1), eq("q2 = 1", m.q2, 1), eq("S3 = q3", m.S3, m.q3)]
    return dict(a1=a1, a2=a2, a3=a3), res


@register("isosceles", "q3 = 4(1-S)q(1-q)/(1-Sq)^2 and S3 = 4S(1-S)(1-q)/(1-Sq)^2")
def _isosceles(ctx, rng):
    a1, a2, a3 = G.isosceles_triangle(ctx, rng)
    m = triangle_metrics(a1, a2, a3)
    _need(m.q1 == m.q2, "isosceles")
    q, S = m.q1, m.S1
    den = (1 - S * q) ** 2
    res = [
        eq("q3 (1-Sq)^2 = 4(1-S)q(1-q)", m.q3 * den, 4 * (1 - S) * q * (1 - q)),
        eq("S3 (1-Sq)^2 = 4S(1-S)(1-q)", m.S3 * den, 4 * S * (1 - S) * (1 - q)),
    ]
    return dict(a1=a1, a2=a2, a3=a3), res


@register("isosceles_parallax", "q = 4(S-1)/S^2 with a1 null")
def _isosceles_parallax(ctx, rng):
    (alpha,) = _nulls(ctx, rng, 1)
    a2 = G.random_point(ctx, rng)
    m = G.random_point_on(alpha.dual(), rng)
    a3 = reflect_point(a2, m)
    _need(a2 != a3 and not collinear(alpha, a2, a3), "triangle")
    L1, L2, L3 = join(a2, a3), join(alpha, a3), join(alpha, a2)
    q = quadrance(a2, a3)
    S2, S3 = spread(L1, L3), spread(L1, L2)
    return dict(α1=alpha, a2=a2, a3=a3, m=m), [
        eq("S2 = S3", S2, S3),
        eq("q S^2 = 4(S-1)", q * S2 * S2, 4 * (S2 - 1)),
    ]


@register("equilateral", "(1-Sq)^2 = 4(1-S)(1-q)")
def _equilateral(ctx, rng):
    a1, a2, a3 = G.equilateral_triangle(ctx, rng)
    m = triangle_metrics(a1, a2, a3)
    _need(m.q1 == m.q2 == m.q3, "equilateral")
    q, S = m.q1, m.S1
    return dict(a1=a1, a2=a2, a3=a3), [
        eq("S1 = S2", m.S1, m.S2),
        eq("S2 = S3", m.S2, m.S3),
        eq("(1-Sq)^2 = 4(1-S)(1-q)", (1 - S * q) ** 2, 4 * (1 - S) * (1 - q)),
    ]


# -- Lambert ----------------------------------------------------------------------------------------


def lambert_quadrilateral(ctx, rng):
    a = G.random_point(ctx, rng)
    AB = G.random_line_through(a, rng)
    _need(not is_null(AB), "non-null ab")
    b = G.random_point_on(AB, rng, avoid=(a,))
    BC = altitude_line(b, AB)
    c = G.random_point_on(BC, rng, avoid=(b,))
    AD = altitude_line(a, AB)
    CD = altitude_line(c, BC)
    d = meet(AD, CD)
    return a, b, c, d


@register("lambert", "Lambert quadrilateral: all eleven relations")
def _lambert(ctx, rng):
    a, b, c, d = lambert_quadrilateral(ctx, rng)
    ab, bc, cd, da = join(a, b), join(b, c), join(c, d), join(d, a)
    _need(perp_lines(da, ab) and perp_lines(ab, bc) and perp_lines(bc, cd), "three right spreads")
    q, p = quadrance(a, b), quadrance(b, c)
    _need(1 - q * p != 0, "1 - qp nonzero")
    y = q * (1 - p) / (1 - q * p)
    x = p * (1 - q) / (1 - q * p)
    s = q + p - q * p
    r = (q + p - 2 * q * p) / (1 - q * p)
    _need(r != 0 and s != 0, "nonzero r and s")
    bd, ac = join(b, d), join(a, c)
    res = [
        eq("q(c,d) = y", quadrance(c, d), y),
        eq("q(a,d) = x", quadrance(a, d), x),
        eq("q(a,c) = s", quadrance(a, c), s),
        eq("q(b,d) = r", quadrance(b, d), r),
        eq("S(ba,bd) = x/r", spread(ab, bd), x / r),
        eq("S(bc,bd) = y/r", spread(bc, bd), y / r),
        eq("S(cb,ca) = q/s", spread(bc, ac), q / s),
        eq("S(ac,ab) = p/s", spread(ac, ab), p / s),
        eq("S(ac,ad) = q(1-p)/s", spread(ac, da), q * (1 - p) / s),
        eq("S(ca,cd) = p(1-q)/s", spread(ac, cd), p * (1 - q) / s),
        eq("S(da,dc) = 1 - pq", spread(da, cd), 1 - p * q),
    ]
    return dict(a=a, b=b, c=c, d=d), res


# -- thinness ----------------------------------------------------------------------------------------


@register("cevian_thinness", "quadrea of the cevian triangle of a triply nil triangle is 1")
def _cevian_thinness(ctx, rng):
    a1, a2, a3 = _nulls(ctx, rng, 3)
    a = G.random_point(ctx, rng, allow_null=True)
    _need(a not in (a1, a2, a3), "a distinct from the null points")
    c1 = meet(join(a, a1), join(a2, a3))
    c2 = meet(join(a, a2), join(a1, a3))
    c3 = meet(join(a, a3), join(a1, a2))
    A = triangle_metrics(c1, c2, c3).quadrea
    return dict(α1=a1, α2=a2, α3=a3, a=a, c1=c1, c2=c2, c3=c3), [eq("A(c1c2c3) = 1", A, 1)]


@register("altitude_thinness", "quadrea of the altitude-foot triangle of a triply nil triangle is 1")
def _altitude_thinness(ctx, rng):
    a1, a2, a3 = _nulls(ctx, rng, 3)
    a = G.random_point(ctx, rng, allow_null=True)
    sides = (join(a2, a3), join(a1, a3), join(a1, a2))
    _need(all(a.dual() != L for L in sides), "a not dual to a side")
    b1, b2, b3 = (base_point(a, L) for L in sides)
    A = triangle_metrics(b1, b2, b3).quadrea
    return dict(α1=a1, α2=a2, α3=a3, a=a, b1=b1, b2=b2, b3=b3), [eq("A(b1b2b3) = 1", A, 1)]


# -- null perspective, subtended, butterfly -----------------------------------------------------------


@register("null_perspective", "q(x,y) = q(x1,y1) under perspectivity from b")
def _null_perspective(ctx, rng):
    a1, a2, a3 = _nulls(ctx, rng, 3)
    b = G.random_point_on(join(a1, a3), rng, avoid=(a1, a3))
    L12, L23 = join(a1, a2), join(a2, a3)
    x = G.random_point_on(L12, rng)
    y = G.random_point_on(L12, rng)
    x1, y1 = meet(L23, join(x, b)), meet(L23, join(y, b))
    return dict(α1=a1, α2=a2, α3=a3, b=b, x=x, y=y, x1=x1, y1=y1), [
        eq("q(x,y) = q(x1,y1)", quadrance(x, y), quadrance(x1, y1))
    ]


def null_subtended_q(a1, a2, a3, M):
    p1 = meet(join(a1, a3), M)
    p2 = meet(join(a2, a3), M)
    return p1, p2, quadrance(p1, p2)


@register("null_subtended", "q S = 1, and q does not depend on the third null point")
def _null_subtended(ctx, rng):
    a1, a2, a3, a4 = _nulls(ctx, rng, 4)
    L = join(a1, a2)
    M = G.random_line(ctx, rng)
    p1, p2, q = null_subtended_q(a1, a2, a3, M)
    S = spread(L, M)
    _, _, q_other = null_subtended_q(a1, a2, a4, M)
    return dict(α1=a1, α2=a2, α3=a3, α3_alt=a4, M=M, a1=p1, a2=p2), [
        eq("q S = 1", q * S, 1),
        eq("q independent of α3", q, q_other),
    ]


@register("null_subtended_dual", "S q = 1 for the dual configuration")
def _null_subtended_dual(ctx, rng):
    L1, L2, L3 = (p.dual() for p in _nulls(ctx, rng, 3))
    l = meet(L1, L2)
    m = G.random_point(ctx, rng)
    A1 = join(meet(L1, L3), m)
    A2 = join(meet(L2, L3), m)
    S, q = spread(A1, A2), quadrance(l, m)
    return dict(Λ1=L1, Λ2=L2, Λ3=L3, l=l, m=m, A1=A1, A2=A2), [eq("S q = 1", S * q, 1)]


@register("opposite_subtended", "q(a,b) = q(c,d)")
def _opposite_subtended(ctx, rng):
    al, be, ga, de, up, mu = _nulls(ctx, rng, 6)
    a = meet(join(al, mu), join(ga, de))
    b = meet(join(be, mu), join(ga, de))
    c = meet(join(ga, up), join(al, be))
    d = meet(join(de, up), join(al, be))
    return dict(α=al, β=be, γ=ga, δ=de, υ=up, μ=mu, a=a, b=b, c=c, d=d), [
        eq("q(a,b) = q(c,d)", quadrance(a, b), quadrance(c, d))
    ]


def _butterfly(ctx, rng):
    al, be, ga, de = _nulls(ctx, rng, 4)
    g = meet(join(al, ga), join(be, de))
    L = G.random_line_through(g, rng)
    return al, be, ga, de, g, L


@register("butterfly_quadrance", "q(g,x) = q(g,y)")
def _butterfly_quadrance(ctx, rng):
    al, be, ga, de, g, L = _butterfly(ctx, rng)
    x, y = meet(L, join(al, de)), meet(L, join(be, ga))
    return dict(α=al, β=be, γ=ga, δ=de, g=g, L=L, x=x, y=y), [
        eq("q(g,x) = q(g,y)", quadrance(g, x), quadrance(g, y))
    ]


@register("butterfly_spread", "S(L,αδ) = S(L,βγ)")
def _butterfly_spread(ctx, rng):
    al, be, ga, de, g, L = _butterfly(ctx, rng)
    return dict(α=al, β=be, γ=ga, δ=de, g=g, L=L), [
        eq("S(L,αδ) = S(L,βγ)", spread(L, join(al, de)), spread(L, join(be, ga)))
    ]


# -- 48/64 ----------------------------------------------------------------------------------------------


def _48_64_results(P, R, T, names="PRT"):
    a, b, c = names
    res = [
        eq(f"{a}{b}+{b}{c}+{a}{c} = 48", P * R + R * T + P * T, 48),
        eq(f"{a}{b}{c} = 64", P * R * T, 64),
    ]
    if P != 0 and R != 0 and T != 0:
        rs = C.reciprocal_sum_48(P, R, T)
        res.append((f"1/{a}+1/{b}+1/{c} = 3/4", rs.ok, rs.value))
    return res


@register("theorem_48_64", "PR+RT+PT = 48 and PRT = 64 for a null quadrangle")
def _theorem_48_64(ctx, rng):
    alphas = _nulls(ctx, rng, 4)
    P, R, T = C.opposite_spreads(alphas)
    b = {f"α{i + 1}": a for i, a in enumerate(alphas)}
    b.update(P=ctx(P), R=ctx(R), T=ctx(T))
    return b, _48_64_results(P, R, T)


@register("theorem_48_64_dual", "pr+rt+pt = 48 and prt = 64 for a null quadrilateral")
def _theorem_48_64_dual(ctx, rng):
    lams = [a.dual() for a in _nulls(ctx, rng, 4)]
    p, r, t = C.opposite_quadrances(lams)
    b = {f"Λ{i + 1}": L for i, L in enumerate(lams)}
    b.update(p=p, r=r, t=t)
    return b, _48_64_results(p, r, t, "prt")


# -- pentagons and septagons ---------------------------------------------------------------------------


def pentagon_points(a):
    """Diagonal points ``b`` and opposite points ``c`` (1-based lists with a dummy at 0)."""
    A = [None] + list(a)

    def J(i, j):
        return join(A[i], A[j])

    b = [None,
         meet(J(2, 4), J(3, 5)), meet(J(3, 5), J(4, 1)), meet(J(4, 1), J(5, 2)),
         meet(J(5, 2), J(1, 3)), meet(J(1, 3), J(2, 4))]
    c = [None,
         meet(join(A[1], b[1]), J(2, 5)), meet(join(A[2], b[2]), J(3, 1)),
         meet(join(A[3], b[3]), J(4, 2)), meet(join(A[4], b[4]), J(5, 3)),
         meet(join(A[5], b[5]), J(1, 4))]
    return b, c


def _no_three_consecutive_collinear(pts) -> bool:
    n = len(pts)
    return not any(collinear(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) for i in range(n))


@register("pentagon_ratio", "product of five quadrances equals the opposite product")
def _pentagon_ratio(ctx, rng):
    a = [G.random_point(ctx, rng) for _ in range(5)]
    _need(len(set(a)) == 5 and _no_three_consecutive_collinear(a), "pentagon")
    b, c = pentagon_points(a)
    q = quadrance
    lhs = q(b[1], c[4]) * q(b[2], c[5]) * q(b[3], c[1]) * q(b[4], c[2]) * q(b[5], c[3])
    rhs = q(b[2], c[4]) * q(b[3], c[5]) * q(b[4], c[1]) * q(b[5], c[2]) * q(b[1], c[3])
    bind = {f"a{i + 1}": p for i, p in enumerate(a)}
    return bind, [eq("pentagon ratio", lhs, rhs)]


@register("pentagon_null_product", "product of consecutive diagonal-point quadrances is -1/1024")
def _pentagon_null_product(ctx, rng):
    a = _nulls(ctx, rng, 5)
    b, _ = pentagon_points(a)
    prod = 1
    for i in range(1, 6):
        prod = prod * quadrance(b[i], b[i % 5 + 1])
    bind = {f"α{i + 1}": p for i, p in enumerate(a)}
    return bind, [eq("product = -1/4^5", prod, ctx.frac(-1, 1024))]


@register("pentagon_null_symmetry", "five equalities and independence of α1")
def _pentagon_null_symmetry(ctx, rng):
    a = _nulls(ctx, rng, 6)
    alt, a = a[5], a[:5]
    b, c = pentagon_points(a)
    q = quadrance
    res = [
        eq("q(b1,c4) = q(b5,c2)", q(b[1], c[4]), q(b[5], c[2])),
        eq("q(b2,c5) = q(b1,c3)", q(b[2], c[5]), q(b[1], c[3])),
        eq("q(b3,c1) = q(b2,c4)", q(b[3], c[1]), q(b[2], c[4])),
        eq("q(b4,c2) = q(b3,c5)", q(b[4], c[2]), q(b[3], c[5])),
        eq("q(b5,c3) = q(b4,c1)", q(b[5], c[3]), q(b[4], c[1])),
    ]
    b2, c2 = pentagon_points([alt] + a[1:])
    res.append(eq("q(b4,c2) independent of α1", q(b[4], c[2]), q(b2[4], c2[2])))
    bind = {f"α{i + 1}": p for i, p in enumerate(a)}
    bind["α1_alt"] = alt
    return bind, res


def septagon_points(a):
    A = [None] + list(a)

    def J(i, j):
        return join(A[(i - 1) % 7 + 1], A[(j - 1) % 7 + 1])

    b = [None] + [meet(J(i + 2, i + 4), J(i + 3, i + 5)) for i in range(1, 8)]
    c = [None] + [meet(join(A[i], b[i]), J(i - 1, i + 1)) for i in range(1, 8)]
    return b, c


@register("septagon_conic_ratio", "septagon on a conic: product of seven quadrances equals the opposite product")
def _septagon_conic_ratio(ctx, rng):
    pts, form = G.septagon_on_conic(ctx, rng)
    _need(len(set(pts)) == 7 and _no_three_consecutive_collinear(pts), "septagon")
    b, c = septagon_points(pts)
    q = quadrance
    lhs = rhs = 1
    for i in range(1, 8):
        lhs = lhs * q(c[i], b[(i + 3) % 7 + 1])
        rhs = rhs * q(c[i], b[(i + 2) % 7 + 1])
    bind = {f"a{i + 1}": p for i, p in enumerate(pts)}
    res = [
        holds("points on one conic", all(ctx.is_zero_int(G.conic_value(form, p)) for p in pts)),
        eq("septagon ratio", lhs, rhs),
    ]
    return bind, res


# -- canonical points and Jumping Jack -----------------------------------------------------------------


def canonical_instance(ctx, rng):
    L = join(*_nulls(ctx, rng, 2))
    # same order as canonical_points uses
    a1, a2 = null_points_on(L)
    x3 = G.random_point_on(L, rng)
    y3 = G.random_point_on(L, rng, avoid=(x3,))

    def aux():
        (a3,) = [p for p in _nulls(ctx, rng, 3) if p not in (a1, a2)][:1]
        b1 = G.random_point_on(join(a2, a3), rng, allow_null=True)
        b2 = G.random_point_on(join(a1, a3), rng, allow_null=True)
        return a3, b1, b2

    return x3, y3, aux


@register("canonical_points", "z3, w3 depend only on x3, y3; three collinearities")
def _canonical_points(ctx, rng):
    x3, y3, aux = canonical_instance(ctx, rng)
    P = C.canonical_points(x3, y3, *aux())
    P2 = C.canonical_points(x3, y3, *aux())
    L = join(P["alpha1"], P["alpha2"])
    res = [
        holds(f"b3 = {CANONICAL_B3_READING} lies on α1α2", incident(P["b3"], L)),
        holds("z3 independent of aux", P["z3"] == P2["z3"]),
        holds("w3 independent of aux", P["w3"] == P2["w3"]),
        holds("b1, z2, w3 collinear", collinear(P["b1"], P["z2"], P["w3"])),
        holds("b2, z3, w1 collinear", collinear(P["b2"], P["z3"], P["w1"])),
        holds("b3, z1, w2 collinear", collinear(P["b3"], P["z1"], P["w2"])),
    ]
    return {k: v for k, v in P.items()}, res


def canonical_quadrances(P):
    """``(q, r, r_zw)`` with ``q = q(x3,y3)``, ``r = q(x3,z3)``, ``r_zw = q(z3,w3)``."""
    x3, y3, z3, w3 = P["x3"], P["y3"], P["z3"], P["w3"]
    return quadrance(x3, y3), quadrance(x3, z3), quadrance(z3, w3)


@register("canonical_cubic", "(q-4r)^2 = 8qr(2r-q) with r the quadrance to a canonical point")
def _canonical_cubic(ctx, rng):
    x3, y3, aux = canonical_instance(ctx, rng)
    P = C.canonical_points(x3, y3, *aux())
    q, r, r_zw = canonical_quadrances(P)
    x3, y3, z3, w3 = P["x3"], P["y3"], P["z3"], P["w3"]
    res = [
        eq("q(x3,z3) = q(y3,w3)", r, quadrance(y3, w3)),
        eq("q(x3,w3) = q(y3,z3)", quadrance(x3, w3), quadrance(y3, z3)),
        eq("(q-4r)^2 = 8qr(2r-q), r = q(x3,z3)", C.canonical_cubic(q, r), 0),
        eq("(q-4r)^2 = 8qr(2r-q), r = q(x3,w3)", C.canonical_cubic(q, quadrance(x3, w3)), 0),
        # the canonical pair itself satisfies a conic relation
        eq("q^2 + 4 q(z3,w3)(1-q) = 0", q * q + 4 * r_zw * (1 - q), 0),
    ]
    return dict(x3=x3, y3=y3, z3=z3, w3=w3, α1=P["alpha1"], α2=P["alpha2"]), res


@register("jumping_jack", "16rs(3-4(s+r)) = 1")
def _jumping_jack(ctx, rng):
    a = _nulls(ctx, rng, 5)
    g = meet(join(a[0], a[2]), join(a[1], a[3]))
    L = G.random_line_through(g, rng, allow_null=True)
    r, s, resid = C.jumping_jack(a, L)
    bind = {f"α{i + 1}": p for i, p in enumerate(a)}
    bind.update(g=g, L=L, r=r, s=s)
    return bind, [("16rs(3-4(s+r)) = 1", resid == 0, resid)]


# -- constructions -------------------------------------------------------------------------------------


@register("orthocenter", "altitudes concur; ortholine of the dual trilateral is dual to the orthocenter", "construction")
def _orthocenter(ctx, rng):
    a1, a2, a3 = G.random_nondual_triangle(ctx, rng)
    N = C.altitudes(a1, a2, a3)
    o = C.orthocenter(a1, a2, a3)
    O = C.ortholine(a1.dual(), a2.dual(), a3.dual())
    return dict(a1=a1, a2=a2, a3=a3, o=o, O=O), [
        holds("altitudes concurrent", concurrent(*N)),
        holds("o on every altitude", all(incident(o, n) for n in N)),
        holds("ortholine = dual of orthocenter", O == o.dual()),
    ]


@register("circumcenters", "four circumlines through three midpoints each; equidistant circumcenters", "construction")
def _circumcenters(ctx, rng):
    a1, a2, a3 = G.midpoint_rich_triangle(ctx, rng)
    lines, centers = C.circumcenters(a1, a2, a3)
    mids = [m for pair in C.six_midpoints(a1, a2, a3) for m in pair]
    res = [holds("four circumlines", len(lines) == 4, len(lines))]
    for i, (Ln, c) in enumerate(zip(lines, centers), start=1):
        on = sum(1 for m in mids if incident(m, Ln))
        res.append(holds(f"C{i} has exactly 3 midpoints", on == 3, on))
        qs = [quadrance(c, a) for a in (a1, a2, a3)] if not is_null(c) else None
        if qs is not None:
            res.append(holds(f"c{i} equidistant", qs[0] == qs[1] == qs[2], qs))
    return dict(a1=a1, a2=a2, a3=a3), res


@register("pascal", "midpoints of the dual-point triangle of three chords are quadrangle diagonal points", "construction")
def _pascal(ctx, rng):
    alphas = _nulls(ctx, rng, 6)
    a, diag = C.pascal_configuration(alphas)
    _need(G.is_generic_triangle(*a), "generic triangle of dual points")
    mids = C.six_midpoints(*a)
    lines, _ = C.circumcenters(*a)
    res = [holds(f"midpoints of side {i + 1} are diagonal points", tuple(mids[i]) == diag[i]) for i in range(3)]
    res.append(holds("four Pascal lines", len(lines) == 4, len(lines)))
    bind = {f"α{i + 1}": p for i, p in enumerate(alphas)}
    return bind, res


@register("double_triangle", "double median, double point, second double point", "construction")
def _double_triangle(ctx, rng):
    a1, a2, a3 = G.random_nondual_triangle(ctx, rng)
    d1, d2, d3 = C.double_triangle(a1, a2, a3)
    _need(not collinear(d1, d2, d3), "non-degenerate double triangle")
    res = []
    for i, (a, p, q) in enumerate(((a1, d2, d3), (a2, d1, d3), (a3, d1, d2)), start=1):
        if is_null(a):
            continue
        res.append(holds(f"a{i} is a midpoint of its side", reflect_point(p, a) == q))
    cev = C._cevians((a1, a2, a3), (d1, d2, d3))
    res.append(holds("double point: a_i d_i concurrent", concurrent(*cev)))
    g = C.double_triangle(d1, d2, d3)
    cev2 = C._cevians((a1, a2, a3), g)
    res.append(holds("second double point: a_i g_i concurrent", concurrent(*cev2)))
    return dict(a1=a1, a2=a2, a3=a3, d1=d1, d2=d2, d3=d3), res


@register("reflection", "reflections are isometric involutions; point and line mirrors agree", "construction")
def _reflection(ctx, rng):
    a = G.random_point(ctx, rng)
    b, c = G.random_point(ctx, rng), G.random_point(ctx, rng)
    M, N = G.random_line(ctx, rng), G.random_line(ctx, rng)
    _need(b != c and M != N, "distinct pairs")
    sb, sc = reflect_point(b, a), reflect_point(c, a)
    sM, sN = reflect_line(M, a), reflect_line(N, a)
    res = [
        holds("σ_a σ_a b = b", reflect_point(sb, a) == b),
        holds("σ_a σ_a M = M", reflect_line(sM, a) == M),
        holds("σ_a fixes a", reflect_point(a, a) == a),
        eq("quadrance preserved", quadrance(sb, sc), quadrance(b, c)),
        eq("spread preserved", spread(sM, sN), spread(M, N)),
        holds("σ_a = σ_{a⊥} (line mirror)", reflect_point_in_line(b, a.dual()) == sb),
        holds("σ_a via null points", reflect_point_via_null_points(b, a) == sb),
    ]
    return dict(a=a, b=b, c=c, M=M, N=N), res


@register("midpoints", "closed-form midpoints equalize quadrance, are perpendicular, and agree with the quadrangle construction", "construction")
def _midpoints(ctx, rng):
    a1, a2, _ = G.midpoint_rich_triangle(ctx, rng)
    d, e = midpoints(a1, a2)
    res = [
        holds("σ_d b = c", reflect_point(a1, d) == a2),
        holds("σ_e b = c", reflect_point(a1, e) == a2),
        holds("d ⊥ e", perp_points(d, e)),
    ]
    if not is_null(d):
        res.append(eq("q(b,d) = q(d,c)", quadrance(a1, d), quadrance(d, a2)))
    con = midpoints_by_construction(a1, a2)
    if con is not None:
        res.append(holds("quadrangle construction agrees", con == (d, e)))
    return dict(b=a1, c=a2, d=d, e=e), res


@register("metric_agreement", "closed forms equal the cross-ratio definitions", "construction")
def _metric_agreement(ctx, rng):
    a1, a2 = G.random_point(ctx, rng), G.random_point(ctx, rng)
    L1, L2 = G.random_line(ctx, rng), G.random_line(ctx, rng)
    return dict(a1=a1, a2=a2, L1=L1, L2=L2), [
        eq("quadrance = cross-ratio", quadrance(a1, a2), quadrance_cr(a1, a2)),
        eq("spread = cross-ratio", spread(L1, L2), spread_cr(L1, L2)),
        eq("spread = quadrance of duals", spread(L1, L2), quadrance(L1.dual(), L2.dual())),
    ]


@register("parabola", "parabola points: locus, sum of quadrances, chord spread, chord tangents", "construction")
def _parabola(ctx, rng):
    f, D, (a, Ta), (b, Tb) = parabola_instance(ctx, rng)
    res = []
    for name, p in (("a", a), ("b", b)):
        loc, ssum = C.parabola_locus_residuals(p, f, D)
        res.append((f"{name}: q(a,f1) = q(a,D1)", loc.ok, loc.value))
        res.append((f"{name}: q(a,f1) + q(a,f2) = 1", ssum.ok, ssum.value))
    cs, perp = C.parabola_chord_residuals(a, Ta, b, Tb, f, D)
    res.append((cs.law, cs.ok, cs.value))
    res.append(holds("ef ⊥ gf", perp))
    try:
        pr = C.parabola_pairing(f, D, base_point(a, D))
    except MidpointsAbsent:
        # the second pair needs midlines of (b2, f2), which the field may lack
        return dict(f=f, D=D, a=a, Ta=Ta, b=b, Tb=Tb), res
    res += [
        holds("midlines over b1 meet at b2", meet(*pr["tangents1"]) == pr["b2"]),
        holds("midlines over b2 meet at b1", meet(*pr["tangents2"]) == base_point(a, D)),
        holds("points over b2 lie on the parabola",
              all(C.parabola_locus_residuals(p, f, D)[0].ok for p in pr["a2"])),
    ]
    return dict(f=f, D=D, a=a, Ta=Ta, b=b, Tb=Tb), res


def parabola_instance(ctx, rng):
    """Focus, directrix and two parabola points with their tangents."""
    D = G.random_line(ctx, rng, bound=5)
    b1 = G.random_point_on(D, rng)
    if ctx.is_rational:
        # an isometric image of b1 makes <b1,b1><f,f> a square, and reflecting
        # b1 in a point of D keeps it on D (every line through the mirror is fixed)
        f = reflect_point(b1, G.random_point(ctx, rng, bound=4))
        b2 = reflect_point(b1, G.random_point_on(D, rng))
    else:
        f = G.random_point(ctx, rng)
        b2 = G.random_point_on(D, rng, avoid=(b1,))
    _need(not incident(f, D) and f.dual() != D, "focus off the directrix")
    _need(b1 != b2, "distinct feet")

    def point_over(b):
        pts, tans = C.parabola_points(f, D, b)
        k = rng.randrange(2)
        return pts[k], tans[k]

    return f, D, point_over(b1), point_over(b2)


@register("bolyai", "limiting lines meet L on the null circle", "construction")
def _bolyai(ctx, rng):
    a, L, b = bolyai_instance(ctx, rng)
    U, V = C.bolyai_limiting_lines(a, L, b)
    nulls = null_points_on(L)
    expected = sorted(join(a, al) for al in nulls)
    mu, mv = meet(U, L), meet(V, L)
    return dict(a=a, L=L, b=b, U=U, V=V), [
        holds("U meets L on the null circle", is_null(mu)),
        holds("V meets L on the null circle", is_null(mv)),
        holds("{U, V} = joins to null points of L", sorted((U, V)) == expected),
    ]


def bolyai_instance(ctx, rng):
    al1, al2 = _nulls(ctx, rng, 2)
    L = join(al1, al2)
    c = G.random_point_on(L, rng, avoid=(al1, al2))
    K = altitude_line(c, L)
    m = G.random_point_on(K, rng, avoid=(c,))
    a = reflect_point(c, m)
    _need(a != c and not incident(a, L), "a off L")
    b = G.random_point_on(L, rng, avoid=(c,))
    return a, L, b


@register("pappus", "Pappus", "construction")
def _pappus(ctx, rng):
    L, M = G.random_line(ctx, rng, True), G.random_line(ctx, rng, True)
    a = [G.random_point_on(L, rng, True) for _ in range(3)]
    b = [G.random_point_on(M, rng, True) for _ in range(3)]
    _need(len(set(a + b)) == 6, "distinct points")
    return dict(a1=a[0], a2=a[1], a3=a[2], b1=b[0], b2=b[1], b3=b[2]), [
        holds("Pappus line", pappus_holds(*a, *b))
    ]


@register("desargues", "Desargues", "construction")
def _desargues(ctx, rng):
    o = G.random_point(ctx, rng, True)
    a = [G.random_point(ctx, rng, True) for _ in range(3)]
    b = [G.random_point_on(join(o, p), rng, True) for p in a]
    _need(len(set(a + b + [o])) == 7, "distinct points")
    return dict(o=o, a1=a[0], a2=a[1], a3=a[2], b1=b[0], b2=b[1], b3=b[2]), [
        holds("Desargues axis", desargues_holds(*a, *b))
    ]


@register("cross_ratio_invariance", "cross-ratio is preserved by perspectivity", "construction")
def _cross_ratio_invariance(ctx, rng):
    L, M = G.random_line(ctx, rng, True), G.random_line(ctx, rng, True)
    _need(L != M, "distinct lines")
    p = G.random_point(ctx, rng, True)
    _need(not incident(p, L) and not incident(p, M), "centre off both lines")
    pts = [G.random_point_on(L, rng, True) for _ in range(4)]
    _need(len(set(pts)) == 4, "distinct points")
    img = [meet(join(p, x), M) for x in pts]
    return dict(p=p, L=L, M=M), [eq("(a,b:c,d) preserved", cross_ratio(*pts), cross_ratio(*img))]


# -- trigonometric laws -----------------------------------------------------------------------------------


def _law(law, sampler):
    def check(ctx, rng):
        if law == "triple_quad":
            a1, a2, a3 = G.collinear_triple(ctx, rng)
            from ..metric import collinear_quadrances
            qs = collinear_quadrances(a1, a2, a3)
            r = law_residual(law, qs)
            return dict(a1=a1, a2=a2, a3=a3), [(law, r.ok, r.value)]
        if law == "triple_spread":
            L1, L2, L3 = G.concurrent_triple(ctx, rng)
            from ..metric import concurrent_spreads
            r = law_residual(law, concurrent_spreads(L1, L2, L3))
            return dict(L1=L1, L2=L2, L3=L3), [(law, r.ok, r.value)]
        a1, a2, a3 = sampler(ctx, rng)
        pts = (a1, a2, a3)
        if law == "spread_dual_law":
            pts = (join(a2, a3).dual(), join(a1, a3).dual(), join(a1, a2).dual())
        r = law_residual(law, triangle_metrics(*pts))
        return dict(a1=a1, a2=a2, a3=a3), [(law, r.ok, r.value)]
    return check


for _name, _sampler in (
    ("triple_quad", None),
    ("triple_spread", None),
    ("pythagoras", G.right_triangle),
    ("pythagoras_dual", G.perpendicular_pair_triangle),
    ("spread_law", G.random_triangle),
    ("spread_dual_law", G.random_triangle),
    ("cross_law", G.random_triangle),
    ("cross_dual", G.random_triangle),
):
    REGISTRY[f"law_{_name}"] = Theorem(f"law_{_name}", _law(_name, _sampler), f"{_name} residual vanishes", "law")


THEOREM_IDS = tuple(REGISTRY)


# -- running checks -------------------------------------------------------------------------------------------


@dataclass
class Failure:
    trial: int
    labels: List[str]
    witness: str


@dataclass
class CheckReport:
    theorem: str
    field: str
    trials: int = 0
    passes: int = 0
    skips: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def n_failures(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        return f"{self.theorem}\t{self.trials}\t{self.passes}\t{self.skips}\t{self.n_failures}"

    def serialize(self) -> str:
        out = [self.line()]
        for f in self.failures:
            out.append(f"# witness {self.theorem} field={self.field} trial={f.trial}")
            out.append(f"#   failed: {', '.join(f.labels)}")
            out.extend(f"#   {ln}" for ln in f.witness.splitlines())
        return "\n".join(out)

    @classmethod
    def parse_line(cls, line: str) -> "CheckReport":
        name, t, p, s, _ = line.split("\t")
        return cls(name, "", int(t), int(p), int(s))


def trial_rng(seed, trial: int) -> random.Random:
    # string seeds are hashed deterministically (sha512), independent of PYTHONHASHSEED
    return random.Random(f"{seed}/{trial}")


def run_trial(theorem_id: str, ctx: Field, seed, trial: int):
    """``('pass' | 'skip' | 'fail', failure or None)`` for one trial."""
    thm = REGISTRY[theorem_id]
    rng = trial_rng(seed, trial)
    for _ in range(MAX_REJECTIONS):
        try:
            bindings, results = thm.check(ctx, rng)
        except (DegenerateError, ZeroDivisionError):
            continue
        except GeneratorExhausted:
            # the generator already spent its own rejection budget
            return "skip", None
        except Exception as exc:  # a crash is a failure with its own witness
            return "fail", Failure(trial, [type(exc).__name__], str(exc))
        bad = [f"{lab} (value {val})" for lab, ok, val in results if not ok]
        if not bad:
            return "pass", None
        witness = "\n".join(f"{k} = {v}" for k, v in bindings.items())
        return "fail", Failure(trial, bad, witness)
    return "skip", None


def _run_chunk(args):
    theorem_id, ctx, seed, trials = args
    return [run_trial(theorem_id, ctx, seed, t) for t in trials]


def run_check(theorem_id: str, trials: int, seed, ctx: Field, jobs: int = 1) -> CheckReport:
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(theorem_id)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = CheckReport(theorem_id, ctx.name)
    if jobs > 1:
        chunks = [list(range(i, trials, jobs)) for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_run_chunk, [(theorem_id, ctx, seed, c) for c in chunks]))
        outcomes = sorted(
            (t, o) for c, part in zip(chunks, parts) for t, o in zip(c, part)
        )
        results = [o for _, o in outcomes]
    else:
        results = [run_trial(theorem_id, ctx, seed, t) for t in range(trials)]
    for status, failure in results:
        report.trials += 1
        if status == "pass":
            report.passes += 1
        elif status == "skip":
            report.skips += 1
        else:
            report.failures.append(failure)
    return report


def theorem_ids(kind: Optional[str] = None) -> list[str]:
    return [k for k, t in REGISTRY.items() if kind is None or t.kind == kind]
