"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also on failure) so the
outcome of each criterion is visible in ``pytest -v -s`` and in the captured
log.  Trial counts and time limits are the contract values.
"""
import os
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import CORPUS
from uhg.census import census
from uhg.errors import DegenerateError
from uhg.field import GF, QQ
from uhg.projective import Point
from uhg.script import evaluate, parse, pretty
from uhg.theorems import constructions as C
from uhg.theorems import registry as R
from uhg.theorems import run_check

HAND = [Point(1, 0, 1), Point(0, 1, 1), Point(-1, 0, 1), Point(0, -1, 1)]
LAWS = ["triple_quad", "triple_spread", "pythagoras", "pythagoras_dual",
        "spread_law", "spread_dual_law", "cross_law", "cross_dual"]


@contextmanager
def criterion(number, title, capsys, limit=None):
    notes = []
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        took = time.perf_counter() - start
        if ok and limit is not None and took >= limit:
            ok = False
            notes.append(f"over the {limit:g} s limit")
        status = "PASS" if ok else "FAIL"
        extra = f" ({'; '.join(notes)})" if notes else ""
        with capsys.disabled():
            print(f"\n{status} criterion {number:>2}: {title} [{took:.2f} s]{extra}")
    if not ok:
        pytest.fail(f"criterion {number}: {'; '.join(notes)}")


def _exact(report, notes, need_all=True):
    """No failures, and (by default) every trial a genuine pass."""
    if report.failures:
        notes.append(report.serialize())
        raise AssertionError(report.line())
    if need_all and report.passes != report.trials:
        notes.append(f"{report.theorem}: only {report.passes}/{report.trials} configurations built")
        raise AssertionError(report.line())
    return report


def test_criterion_01_metric_agreement(capsys):
    with criterion(1, "closed forms = cross-ratio definitions, 10^3 rational pairs", capsys, limit=5) as notes:
        _exact(run_check("metric_agreement", 1000, "acc1", QQ), notes)


def test_criterion_02_law_suite(capsys):
    with criterion(2, "eight laws x 10^3 configurations over Q, F7, F11, F101", capsys, limit=60) as notes:
        for ctx in (QQ, GF(7), GF(11), GF(101)):
            for law in LAWS:
                _exact(run_check(f"law_{law}", 1000, "acc2", ctx), notes)


def test_criterion_03_48_64(capsys):
    with criterion(3, "PR+RT+PT = 48, PRT = 64, hand instance (1,-8,-8), dual", capsys) as notes:
        _exact(run_check("theorem_48_64", 1000, "acc3", QQ), notes)
        _exact(run_check("theorem_48_64_dual", 1000, "acc3", QQ), notes)
        P, R, T = C.opposite_spreads(HAND)
        assert (P, R, T) == (1, -8, -8), (P, R, T)
        assert 1 / P + 1 / R + 1 / T == Fraction(3, 4)
        assert C.opposite_quadrances([a.dual() for a in HAND]) == (1, -8, -8)


def test_criterion_04_constants(capsys):
    with criterion(4, "-1/1024, thinness quadrea 1, qS = 1 on 10^2 configurations", capsys) as notes:
        for tid in ("pentagon_null_product", "cevian_thinness", "altitude_thinness",
                    "null_subtended", "null_subtended_dual"):
            _exact(run_check(tid, 100, "acc4", QQ), notes)


def _literal_canonical_zeros(n):
    rng = random.Random("acc5-literal")
    zeros = built = 0
    while built < n:
        try:
            x3, y3, aux = R.canonical_instance(QQ, rng)
            P = C.canonical_points(x3, y3, *aux())
        except DegenerateError:
            continue
        built += 1
        q, _, r_zw = R.canonical_quadrances(P)
        zeros += C.canonical_cubic(q, r_zw) == 0
    return zeros


def test_criterion_05_cubics(capsys):
    with criterion(5, "canonical points cubic, aux invariance, Jumping Jack, curve points", capsys) as notes:
        _exact(run_check("canonical_cubic", 100, "acc5", QQ), notes)
        _exact(run_check("canonical_points", 100, "acc5", QQ), notes)
        _exact(run_check("jumping_jack", 1000, "acc5", QQ), notes)
        assert C.canonical_cubic(Fraction(9, 8), Fraction(9, 8)) == 0
        assert C.jumping_jack_cubic(Fraction(1, 4), Fraction(1, 4)) == 0
        # the check uses r = q(x3,z3); measure the literal r = q(z3,w3) on the same kind of instances
        literal = _literal_canonical_zeros(100)
        notes.append(f"green with r = q(x3,z3) = q(y3,w3); literal r = q(z3,w3) gives residual 0 "
                     f"on {literal}/100 instances, see README")


def test_criterion_06_constructions(capsys):
    with criterion(6, "orthocenter/ortholine, circumlines and circumcenters, double triangle", capsys) as notes:
        _exact(run_check("orthocenter", 1000, "acc6", QQ), notes)
        _exact(run_check("circumcenters", 100, "acc6", QQ), notes)
        _exact(run_check("double_triangle", 100, "acc6", QQ), notes)


def test_criterion_07_reflection(capsys):
    with criterion(7, "reflections: isometry, involution, point and line mirror agree", capsys) as notes:
        _exact(run_check("reflection", 1000, "acc7", QQ), notes)


def test_criterion_08_parabola(capsys):
    with criterion(8, "parabola locus, q(a,f1)+q(a,f2) = 1, chord theorems", capsys) as notes:
        _exact(run_check("parabola", 100, "acc8", QQ), notes)


def test_criterion_09_bolyai(capsys):
    with criterion(9, "limiting lines meet L on the null circle, 10^2 successes", capsys) as notes:
        _exact(run_check("bolyai", 100, "acc9", QQ), notes)


def test_criterion_10_census(capsys):
    with criterion(10, "null points = p+1 for p in {3,5,7,11,13,101}", capsys, limit=10) as notes:
        for p in (3, 5, 7, 11, 13, 101):
            rec = census(p)
            if rec.null_points != p + 1:
                notes.append(f"p={p}: {rec.null_points}")
            assert rec.null_points == p + 1
        assert census(7).null_points == 8


def test_criterion_11_corpus_and_check_all(capsys):
    with criterion(11, "corpus passes and round-trips; check --theorem all exits 0", capsys, limit=600) as notes:
        files = sorted(f for f in os.listdir(CORPUS) if f.endswith(".uhg"))
        assert len(files) >= 10
        for name in files:
            prog = parse(open(os.path.join(CORPUS, name), encoding="utf-8").read())
            ev = evaluate(prog)
            if not ev.ok:
                notes.append(f"{name}: {ev.report()}")
            assert ev.ok
            assert parse(pretty(prog)) == prog, name
        t0 = time.perf_counter()
        r = subprocess.run([sys.executable, "-m", "uhg.cli", "check", "--theorem", "all"],
                           capture_output=True, text=True)
        notes.append(f"{len(files)} scripts; check all {time.perf_counter() - t0:.1f} s")
        if r.returncode != 0:
            notes.append(r.stdout[-2000:] + r.stderr[-2000:])
        assert r.returncode == 0
