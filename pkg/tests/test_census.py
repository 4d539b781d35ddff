import pytest

from conftest import form
from uhg.census import census, circle_tally, projective_triples, square_class
from uhg.errors import InvalidModulus
from uhg.field import GF
from uhg.projective import Point

PRIMES = [3, 5, 7, 11, 13, 101]


@pytest.mark.parametrize("p", PRIMES)
def test_counts(p):
    rec = census(p)
    assert rec.total_points == p * p + p + 1
    assert rec.null_points == p + 1
    assert rec.null_lines == p + 1
    assert sum(rec.point_classes.values()) == rec.total_points


def test_p7_by_brute_force():
    # every nonzero triple mod 7, up to scalars
    seen = set()
    nulls = 0
    for x in range(7):
        for y in range(7):
            for z in range(7):
                if (x, y, z) == (0, 0, 0):
                    continue
                key = Point(x, y, z, ctx=GF(7))
                if key in seen:
                    continue
                seen.add(key)
                nulls += form((x, y, z), (x, y, z)) % 7 == 0
    assert len(seen) == 57 and nulls == 8
    assert census(7).null_points == 8


def test_projective_triples_are_distinct_points():
    pts = {Point._raw(GF(5), v) for v in projective_triples(5)}
    assert len(pts) == 31


def test_square_class():
    assert square_class(0, 13) == "zero"
    assert square_class(4, 13) == "square"
    assert square_class(5, 13) == "nonsquare"


@pytest.mark.parametrize("p", [5, 7, 11])
def test_circle_tallies_depend_only_on_the_class(p):
    # the census uses one center per class; check every center of each class agrees
    ctx = GF(p)
    rec = census(p, circles=True)
    for v in projective_triples(p):
        cls = square_class(form(v, v), p)
        if cls == "zero":
            continue
        assert circle_tally(Point._raw(ctx, v)) == rec.circles[cls]


def test_census_text():
    text = str(census(3, circles=True))
    assert "null_points\t4" in text and "points\t13" in text
    assert "circles_center_square" in text


def test_census_rejects_two():
    with pytest.raises(InvalidModulus):
        census(2)
