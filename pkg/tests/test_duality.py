from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import fields, form, points
from uhg.duality import (
    altitude_line,
    altitude_point,
    base_line,
    base_point,
    bilines,
    conjugate_points,
    is_null,
    midpoints,
    midpoints_by_construction,
    null_point_from_param,
    null_points_on,
    parallel_line,
    parallel_point,
    perp,
    polar_by_construction,
    reflect,
    reflect_line,
    reflect_point,
    reflect_point_in_line,
    reflect_point_via_null_points,
    reflection_matrix,
)
from uhg.errors import DegenerateError, DualCouple, NullMirror
from uhg.field import GF, QQ
from uhg.metric import quadrance, spread
from uhg.projective import Line, Point, incident, join


def test_dual_examples():
    assert Point(0, 0, 1).dual() == Line(0, 0, 1)
    a = Point(1, 0, 1)
    assert is_null(a) and incident(a, a.dual())


def test_perpendicularity_examples():
    assert perp(Point(1, 0, 0), Point(0, 1, 0))
    assert perp(Line(1, 0, 0), Line(0, 1, 0))
    assert not perp(Point(0, 0, 1), Point(0, 0, 1))
    with pytest.raises(TypeError):
        perp(Point(1, 0, 0), Line(1, 0, 0))


@given(st.data())
def test_perp_matches_form_oracle(data):
    ctx = data.draw(fields)
    a, b = data.draw(points(ctx)), data.draw(points(ctx))
    assert perp(a, b) == ctx.is_zero_int(form(a.coords, b.coords))
    assert perp(a, b) == perp(b, a)


def test_altitude_example():
    assert altitude_line(Point(0, 0, 1), Line(0, 1, 1)) == Line(1, 0, 0)
    with pytest.raises(DualCouple):
        altitude_line(Point(1, 2, 3), Line(1, 2, 3))


@given(st.data())
def test_couple_constructions(data):
    ctx = data.draw(fields)
    a = data.draw(points(ctx))
    L = data.draw(points(ctx)).dual()
    assume(a.dual() != L)
    N = altitude_line(a, L)
    assert incident(a, N) and perp(N, L)
    n = altitude_point(a, L)
    assert incident(n, L) and perp(n, a)
    try:
        P = parallel_line(a, L)
        assert incident(a, P) and perp(P, N)
        p = parallel_point(a, L)
        assert incident(p, a.dual())
        b = base_point(a, L)
        assert incident(b, L) and incident(b, N)
        B = base_line(a, L)
        assert incident(n, B) and incident(L.dual(), B)
    except DegenerateError:
        assume(False)


def test_conjugates():
    a1, a2 = Point(0, 0, 1), Point(1, 0, 2)
    b1, b2 = conjugate_points(a1, a2)
    L = join(a1, a2)
    assert incident(b1, L) and incident(b2, L)
    assert perp(b1, a1) and perp(b2, a2)


def test_null_points_examples():
    assert null_points_on(Line(0, 1, 0)) == sorted([Point(1, 0, 1), Point(-1, 0, 1)])
    assert null_points_on(Line(1, 0, 1)) == [Point(1, 0, 1)]
    assert null_points_on(Line(1, 0, 3)) == []
    assert null_point_from_param(QQ(0)) == Point(1, 0, 1)
    assert null_point_from_param(QQ(1)) == Point(0, 1, 1)


@given(st.data())
def test_null_points_are_null_and_incident(data):
    ctx = data.draw(fields)
    L = data.draw(points(ctx)).dual()
    pts = null_points_on(L)
    assert len(pts) <= 2
    for p in pts:
        assert is_null(p) and incident(p, L)
    if is_null(L):
        assert pts == [L.dual()]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_null_points_on_agrees_with_exhaustion(p):
    F = GF(p)
    allpts = [Point._raw(F, (x, y, 1)) for x in range(p) for y in range(p)]
    allpts += [Point._raw(F, (x, 1, 0)) for x in range(p)] + [Point._raw(F, (1, 0, 0))]
    nulls = [q for q in allpts if form(q.coords, q.coords) % p == 0]
    for L in (q.dual() for q in allpts):
        assert set(null_points_on(L)) == {q for q in nulls if incident(q, L)}


@given(st.integers(-50, 50), st.integers(1, 50))
def test_null_param_is_null(n, d):
    assert is_null(null_point_from_param(Fraction(n, d)))


def test_reflection_matrix_last_entry():
    # the (3,3) entry is -(u^2 + v^2 + w^2)
    assert reflection_matrix(Point(1, 2, 3))[2][2] == -(1 + 4 + 9)
    assert reflect_point(Point(1, 2, 3), Point(0, 0, 1)) == Point(1, 2, -3)
    with pytest.raises(NullMirror):
        reflection_matrix(Point(1, 0, 1))


def _reflect_oracle(b, a):
    # b <a,a> - 2 <a,b> a, the reflection in a with respect to the form
    aa, ab = form(a, a), form(a, b)
    return tuple(aa * x - 2 * ab * y for x, y in zip(b, a))


@given(st.data())
def test_reflection_matches_oracle(data):
    ctx = data.draw(fields)
    a = data.draw(points(ctx, allow_null=False))
    b = data.draw(points(ctx))
    img = _reflect_oracle(b.coords, a.coords)
    assume(any(not ctx.is_zero_int(c) for c in img))
    assert reflect_point(b, a) == Point._raw(ctx, img)


@given(st.data())
def test_reflection_is_an_involutive_isometry(data):
    ctx = data.draw(fields)
    a = data.draw(points(ctx, allow_null=False))
    b, c = data.draw(points(ctx, allow_null=False)), data.draw(points(ctx, allow_null=False))
    assert reflect_point(reflect_point(b, a), a) == b
    assert quadrance(reflect_point(b, a), reflect_point(c, a)) == quadrance(b, c)
    assume(b != c)
    M = join(b, c)
    assume(not is_null(M))
    N = data.draw(points(ctx, allow_null=False)).dual()
    assert reflect_line(reflect_line(M, a), a) == M
    assert spread(reflect_line(M, a), reflect_line(N, a)) == spread(M, N)
    assert reflect(M, a.dual()) == reflect_line(M, a)


@given(st.data())
def test_reflection_paths_agree(data):
    ctx = data.draw(fields)
    a = data.draw(points(ctx, allow_null=False))
    b = data.draw(points(ctx))
    try:
        via_nulls = reflect_point_via_null_points(b, a)
        via_line = reflect_point_in_line(b, a.dual())
    except DegenerateError:
        assume(False)
    assert via_nulls == reflect_point(b, a) == via_line


def test_polar_by_construction():
    a = Point(3, 2, 1)
    alpha, gamma = Point(1, 0, 1), Point(0, 1, 1)
    assert polar_by_construction(a, alpha, gamma) == a.dual()
    with pytest.raises(DegenerateError):  # y = z is tangent at gamma
        polar_by_construction(Point(3, 1, 1), alpha, gamma)


def test_midpoint_example_absent():
    assert midpoints(Point(0, 0, 1), Point(Fraction(1, 2), 0, 1)) is None


@given(st.data())
def test_midpoints_closed_form_and_construction(data):
    ctx = data.draw(fields)
    b, c = data.draw(points(ctx, allow_null=False)), data.draw(points(ctx, allow_null=False))
    assume(b != c and not is_null(join(b, c)))
    m = midpoints(b, c)
    if m is None:
        return
    d, e = m
    # equal quadrance to both ends, and the reflection in d swaps b and c
    assert quadrance(b, d) == quadrance(c, d)
    assert quadrance(b, e) == quadrance(c, e)
    assert reflect_point(b, d) == c and reflect_point(b, e) == c
    assert perp(d, e)
    built = midpoints_by_construction(b, c)
    if built is not None:
        assert built == m


def test_bilines_are_dual_midpoints():
    M, N = Line(0, 0, 1), Line(3, 0, 5)
    m = midpoints(M.dual(), N.dual())
    assert m is not None
    assert bilines(M, N) == (m[0].dual(), m[1].dual())
