import os
import re
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import CORPUS
from uhg.duality import null_point_from_param
from uhg.field import QQ
from uhg.projective import Line, Point, join
from uhg.render import (
    NULL_BLUE,
    Projected,
    Scene,
    incidence_gaps,
    parse_viewport,
    project,
    scene_from_bindings,
)
from uhg.script import parse, run_source
from uhg.script.evaluator import _Evaluator
from uhg.script.syntax import Assertion


def test_project_examples():
    assert project(Point(1, 0, 2)) == Projected(0.5, 0.0, False)
    assert project(Point(1, 2, 0)) == Projected(1.0, 2.0, True)
    assert project(null_point_from_param(QQ(1))) == Projected(0.0, 1.0, False)


def test_viewport_parsing():
    assert parse_viewport("0,0,2.5") == (0, 0, Fraction(5, 2))
    assert parse_viewport("1/2, -1, 3") == (Fraction(1, 2), -1, 3)
    for bad in ("1,2", "0,0,0", "0,0,-1"):
        with pytest.raises(ValueError):
            parse_viewport(bad)


def test_clip_is_exact():
    sc = Scene()
    a, b = sc.clip(Line(0, 1, 0))  # the x-axis
    assert (a, b) == (Point(Fraction(-5, 2), 0, 1), Point(Fraction(5, 2), 0, 1))
    assert sc.clip(Line(1, 0, 10)) is None  # x = 10 is outside


def test_svg_has_blue_null_circle_and_is_deterministic():
    src = open(os.path.join(CORPUS, "orthocenter.uhg"), encoding="utf-8").read()
    svg1 = scene_from_bindings(run_source(src).bindings).svg()
    svg2 = scene_from_bindings(run_source(src).bindings).svg()
    assert svg1 == svg2
    assert svg1.startswith("<?xml") or svg1.startswith("<svg")
    assert NULL_BLUE in svg1 and "<circle" in svg1
    # fixed formatting: every decimal has nine fractional digits
    body = svg1.split("\n", 2)[2]  # past the XML declaration and the svg tag
    for num in re.findall(r"-?\d+\.\d+", body):
        assert len(num.split(".")[1]) == 9


def test_points_at_infinity_become_arrows():
    sc = Scene()
    sc.add_point(Point(1, 2, 0), "d")
    svg = sc.svg()
    assert 'class="infinite-point"' in svg and 'marker-end="url(#arrowhead)"' in svg
    assert ">d</text>" in svg


def _asserted_incidences(src):
    prog = parse(src)
    ev = run_source(src)
    pairs = []
    e = _Evaluator(prog)
    e.env = dict(ev.bindings)
    for st_ in prog.statements:
        if isinstance(st_, Assertion) and st_.pred == "incident":
            a, L = (e.expr(x) for x in st_.args)
            if isinstance(a, Line):
                a, L = L, a
            pairs.append((a, L))
    return ev.bindings, pairs


def test_rendered_incidences_in_the_corpus():
    checked = 0
    for name in sorted(os.listdir(CORPUS)):
        src = open(os.path.join(CORPUS, name), encoding="utf-8").read()
        if not parse(src).ctx.is_rational:
            continue
        bindings, pairs = _asserted_incidences(src)
        sc = scene_from_bindings(bindings)
        for gap in incidence_gaps(sc, pairs):
            assert gap < 1e-9
            checked += 1
    assert checked > 0


small = st.integers(-6, 6)


@given(small, small, small, small, st.integers(1, 6), st.integers(1, 6))
def test_rendered_incidence_on_random_joins(x1, y1, x2, y2, z1, z2):
    a, b = Point(x1, y1, z1), Point(x2, y2, z2)
    assume(a != b)
    L = join(a, b)
    sc = Scene.with_viewport(0, 0, 10)
    for gap in incidence_gaps(sc, [(a, L), (b, L)]):
        assert gap < 1e-9


def test_incidence_gaps_refuse_non_incident_pairs():
    with pytest.raises(ValueError):
        incidence_gaps(Scene(), [(Point(0, 0, 1), Line(1, 0, 1))])
