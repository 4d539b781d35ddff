from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import fields, form, points
from uhg.duality import is_null
from uhg.errors import HypothesisViolated, Inconsistent, NullArgument
from uhg.field import QQ
from uhg.metric import (
    collinear_quadrances,
    concurrent_spreads,
    LAWS,
    law_residual,
    napier_solve,
    quadrance,
    quadrance_cr,
    quadrea,
    right_parallax,
    spread,
    spread_cr,
    spread_equals_dual_quadrance,
    thales_ratios,
    triangle_metrics,
)
from uhg.projective import Line, Point, collinear


def test_quadrance_examples():
    a = Point(0, 0, 1)
    assert quadrance(a, a) == 0
    assert quadrance(a, Point(1, 0, 2)) == Fraction(-1, 3)
    assert quadrance(Point(2, 0, 1), a) == Fraction(4, 3)
    assert quadrance_cr(a, Point(1, 0, 2)) == Fraction(-1, 3)
    with pytest.raises(NullArgument):
        quadrance(a, Point(1, 0, 1))


def test_spread_examples():
    assert spread(Line(1, 0, 0), Line(0, 1, 0)) == 1
    assert spread(Line(1, 2, 0), Line(1, 2, 0)) == 0
    assert spread(Line(1, 1, 1), Line(-1, -1, 1)) == -8
    assert spread_cr(Line(1, 0, 0), Line(0, 1, 0)) == 1
    assert spread_equals_dual_quadrance(Line(1, 0, 0), Line(0, 1, 0)).value == 0


def _q_oracle(ctx, u, v):
    uu, vv, uv = form(u, u), form(v, v), form(u, v)
    return ctx.frac(uu * vv - uv * uv, uu * vv)


@given(st.data())
def test_closed_form_matches_oracle_and_cross_ratio(data):
    ctx = data.draw(fields)
    a, b = data.draw(points(ctx, allow_null=False)), data.draw(points(ctx, allow_null=False))
    q = quadrance(a, b)
    assert q == _q_oracle(ctx, a.coords, b.coords)
    assert q == quadrance_cr(a, b)
    assert spread(a.dual(), b.dual()) == q == spread_cr(a.dual(), b.dual())


@given(st.data())
def test_laws_vanish(data):
    ctx = data.draw(fields)
    a = [data.draw(points(ctx, allow_null=False)) for _ in range(3)]
    assume(not collinear(*a))
    try:
        m = triangle_metrics(*a)
    except NullArgument:  # a null side
        assume(False)
    for law in LAWS:
        if law.startswith("triple_"):  # collinear and concurrent laws, tested below
            continue
        try:
            assert law_residual(law, m).value == 0, law
        except HypothesisViolated:
            pass
    assert m.quadrea == m.S2 * m.q1 * m.q3 == m.S3 * m.q1 * m.q2


def test_pythagoras_on_a_right_triangle():
    a3 = Point(0, 0, 1)
    a1, a2 = Point(1, 0, 3), Point(0, 1, 2)
    m = triangle_metrics(a1, a2, a3)
    assert m.S3 == 1
    assert law_residual("pythagoras", m).value == 0
    r1, r2 = thales_ratios(m)
    assert r1.value == 0 and r2.value == 0
    with pytest.raises(HypothesisViolated):
        law_residual("pythagoras_dual", m)


def test_triple_quad_on_collinear_points():
    pts = [Point(t, 0, 5) for t in (0, 1, 3)]
    q1, q2, q3 = quadrance(pts[1], pts[2]), quadrance(pts[0], pts[2]), quadrance(pts[0], pts[1])
    assert law_residual("triple_quad", (q1, q2, q3)).value == 0


@given(st.data())
def test_triple_laws_on_collinear_and_concurrent(data):
    ctx = data.draw(fields)
    a, b = data.draw(points(ctx, allow_null=False)), data.draw(points(ctx, allow_null=False))
    s, t = data.draw(st.integers(-9, 9)), data.draw(st.integers(-9, 9))
    w = tuple(s * x + t * y for x, y in zip(a.coords, b.coords))
    assume(any(not ctx.is_zero_int(v) for v in w))
    c = Point._raw(ctx, w)
    assume(not is_null(c))
    qs = collinear_quadrances(a, b, c)
    assert law_residual("triple_quad", qs).value == 0
    Ss = concurrent_spreads(a.dual(), b.dual(), c.dual())
    assert law_residual("triple_spread", Ss).value == 0


def test_triple_quad_detects_a_triangle():
    m = triangle_metrics(Point(1, 0, 4), Point(0, 1, 4), Point(-1, -1, 4))
    assert law_residual("triple_quad", m).value != 0


def test_quadrea_positive_for_interior_triangle():
    assert quadrea(Point(1, 0, 4), Point(0, 1, 4), Point(-1, -1, 4)) > 0


def test_napier_all_pairs_are_consistent():
    full = napier_solve(q1=QQ.frac(1, 3), q2=QQ.frac(1, 5))
    keys = list(full)
    for i, k1 in enumerate(keys):
        for k2 in keys[i + 1:]:
            if {k1, k2} == {"S1", "S2"} and full["S1"] + full["S2"] == 1:
                continue
            assert napier_solve(**{k1: full[k1], k2: full[k2]}) == full
    with pytest.raises(Inconsistent):
        napier_solve(S1=QQ.frac(1, 3), S2=QQ.frac(2, 3))


def test_right_parallax():
    assert right_parallax(QQ.frac(1, 2)) == -1
