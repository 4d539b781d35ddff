import random
from fractions import Fraction

import pytest

from uhg.duality import is_null
from uhg.errors import DegenerateError, UnknownTheorem
from uhg.field import GF, QQ
from uhg.metric import quadrance
from uhg.projective import Line, Point, incident, join, meet
from uhg.theorems import REGISTRY, THEOREM_IDS, generate, run_check, theorem_ids
from uhg.theorems import constructions as C
from uhg.theorems import registry as R

HAND = [Point(1, 0, 1), Point(0, 1, 1), Point(-1, 0, 1), Point(0, -1, 1)]


def test_registry_lists_every_kind():
    assert set(theorem_ids("theorem")) | set(theorem_ids("construction")) | set(theorem_ids("law")) == set(THEOREM_IDS)
    assert len(theorem_ids("law")) == 8
    for name in ("theorem_48_64", "jumping_jack", "canonical_cubic", "pentagon_null_product",
                 "cevian_thinness", "altitude_thinness", "null_subtended", "lambert"):
        assert name in REGISTRY


@pytest.mark.parametrize("ctx", [QQ, GF(7), GF(11), GF(101)], ids=lambda c: c.name)
@pytest.mark.parametrize("theorem", THEOREM_IDS)
def test_every_check_passes(theorem, ctx):
    rep = run_check(theorem, 6, "pytest", ctx)
    assert rep.ok, rep.serialize()
    assert rep.trials == 6 == rep.passes + rep.skips


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        run_check("no_such_theorem", 1, 0, QQ)


def test_48_64_hand_instance():
    P, Rr, T = C.opposite_spreads(HAND)
    assert (P, Rr, T) == (1, -8, -8)
    assert P * Rr + Rr * T + P * T == 48 and P * Rr * T == 64
    assert 1 / P + 1 / Rr + 1 / T == Fraction(3, 4)
    assert C.reciprocal_sum_48(P, Rr, T).value == 0
    # the tangents at the same four null points give the dual statement
    assert C.opposite_quadrances([a.dual() for a in HAND]) == (1, -8, -8)


def test_48_64_is_symmetric_in_relabelling():
    P, Rr, T = C.opposite_spreads(HAND)
    shuffled = [HAND[i] for i in (1, 3, 0, 2)]
    assert sorted(C.opposite_spreads(shuffled)) == sorted((P, Rr, T))


def test_curve_points_by_substitution():
    assert C.canonical_cubic(Fraction(9, 8), Fraction(9, 8)) == 0
    # (q - 4r)^2 = (9/8 - 9/2)^2 = 729/64 and 8qr(2r - q) = 8 (81/64)(9/8) = 729/64
    assert (Fraction(9, 8) - 4 * Fraction(9, 8)) ** 2 == Fraction(729, 64)
    assert C.jumping_jack_cubic(Fraction(1, 4), Fraction(1, 4)) == 0
    # 16 (1/16)(3 - 2) = 1
    assert 16 * Fraction(1, 16) * (3 - 4 * Fraction(1, 2)) == 1


def _canonical(seed, ctx=QQ):
    rng = random.Random(seed)
    for _ in range(64):
        try:
            x3, y3, aux = R.canonical_instance(ctx, rng)
            return C.canonical_points(x3, y3, *aux()), x3, y3, aux
        except DegenerateError:
            continue
    raise AssertionError("no canonical instance")


def test_canonical_points_depend_only_on_x3_y3():
    P, x3, y3, aux = _canonical("aux")
    for _ in range(5):
        try:
            Q = C.canonical_points(x3, y3, *aux())
        except DegenerateError:
            continue
        assert (Q["z3"], Q["w3"]) == (P["z3"], P["w3"])


def test_canonical_cubic_reading():
    # the cubic holds for r = q(x3,z3) and r = q(x3,w3); the quadrance between
    # the canonical pair itself obeys a conic relation instead
    for seed in range(10):
        P, *_ = _canonical(seed)
        q, r, r_zw = R.canonical_quadrances(P)
        assert C.canonical_cubic(q, r) == 0
        assert C.canonical_cubic(q, quadrance(P["x3"], P["w3"])) == 0
        assert q * q + 4 * r_zw * (1 - q) == 0
        assert C.canonical_cubic(q, r_zw) != 0


def test_b3_reading():
    P, *_ = _canonical("b3")
    L = join(P["alpha1"], P["alpha2"])
    assert incident(P["b3"], L)
    other = meet(join(P["x1"], P["y1"]), join(P["x2"], P["y2"]))
    assert not incident(other, L)


def test_jumping_jack_corpus_constants():
    # the constants asserted in corpus/jumping_jack.uhg satisfy the cubic
    assert C.jumping_jack_cubic(Fraction(-9, 280), Fraction(25, 21)) == 0


def test_parabola_pairing_is_reported_not_assumed():
    seen = 0
    rng = random.Random("pairing")
    ctx = GF(101)
    while seen < 15:
        f = Point._raw(ctx, (rng.randrange(101), rng.randrange(101), 1))
        D = Line._raw(ctx, (rng.randrange(101), rng.randrange(101), 1))
        if is_null(f) or is_null(D) or incident(f, D) or f.dual() == D:
            continue
        # a point [x:y:1] of D, solving d0 x + d1 y - d2 = 0 for y
        d0, d1, d2 = D.coords
        if d1 % 101 == 0:
            continue
        x = rng.randrange(101)
        b1 = Point._raw(ctx, (x, (d2 - d0 * x) * pow(d1, -1, 101) % 101, 1))
        try:
            pr = C.parabola_pairing(f, D, b1)
        except DegenerateError:
            continue
        seen += 1
        # the midlines over b1 meet at b2, and the points over b2 are on the parabola
        assert meet(*pr["tangents1"]) == pr["b2"]
        assert pr["perpendicular"] == []


def test_generators_are_deterministic():
    for kind in ("triangle", "null_quadrangle", "septagon_conic"):
        assert generate(kind, 7).bindings == generate(kind, 7).bindings
    assert generate("triangle", 1).bindings != generate("triangle", 2).bindings
    with pytest.raises(KeyError):
        generate("nonsense", 0)


def test_parallel_run_matches_serial():
    a = run_check("theorem_48_64", 12, 3, GF(11), jobs=1)
    b = run_check("theorem_48_64", 12, 3, GF(11), jobs=2)
    assert a.serialize() == b.serialize()


def test_failure_carries_a_witness():
    def broken(ctx, rng):
        a = Point(1, 2, 3, ctx=ctx)
        return {"a": a}, [R.eq("deliberately false", ctx(1), ctx(0))]

    R.REGISTRY["_broken"] = R.Theorem("_broken", broken, "always fails")
    try:
        rep = run_check("_broken", 2, 0, QQ)
    finally:
        del R.REGISTRY["_broken"]
    assert rep.n_failures == 2 and not rep.ok
    text = rep.serialize()
    assert text.splitlines()[0] == "_broken\t2\t0\t0\t2"
    assert "# witness _broken field=rational trial=0" in text
    assert "#   a = [1:2:3]" in text
    assert "deliberately false (value 1)" in text


def test_report_line_round_trip():
    rep = run_check("law_cross_law", 5, 0, QQ)
    back = R.CheckReport.parse_line(rep.line())
    assert (back.theorem, back.trials, back.passes, back.skips) == (rep.theorem, 5, rep.passes, rep.skips)
