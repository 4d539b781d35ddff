import os
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS
from uhg.field import GF
from uhg.projective import Line, Point
from uhg.script import ScriptError, diagnostics, evaluate, parse, pretty, run_source
from uhg.script.syntax import FUNCTIONS, PREDICATES
from uhg.theorems.constructions import jumping_jack_cubic

EXPECTED_CORPUS = {"duality", "altitude", "parallel", "base", "conjugates", "midpoints",
                   "orthocenter", "circumlines", "48_64", "jumping_jack"}


def test_grammar_tables():
    assert set(PREDICATES) == {"collinear", "concurrent", "incident", "perp", "on_null", "eq"}
    assert len(FUNCTIONS) == 16


def test_parse_example():
    prog = parse("#field rational  a=[0:0:1]; A=dual(a); assert incident([1:0:0], A);")
    assert prog.field_spec == "rational"
    assert len(prog.statements) == 3


def test_syntax_error_location():
    (d,) = diagnostics("b = meet(;")
    assert (d.line, d.column) == (1, 10)
    with pytest.raises(ScriptError) as exc:
        parse("b = meet(;")
    assert exc.value.diagnostics == [d]


def test_characteristic_two_rejected():
    (d,) = diagnostics("#field fp 2")
    assert "characteristic two" in d.message


@pytest.mark.parametrize("src, needle, line, col", [
    ("a = [1:2];", "expected ':'", 1, 9),
    ("a = [0:0:1];\nb = foo(a);", "unknown function 'foo'", 2, 5),
    ("a = [0:0:1];\nc = join(a);", "join takes 2", 2, 5),
    ("a = [0:0:1];\na = [1:0:0];", "a", 2, 1),
    ("d = e;", "e", 1, 5),
    ("assert nearly([0:0:1]);", "nearly", 1, 8),
    ("a = [0:0:1];\nf = a.3;", "a", 2, 5),
])
def test_diagnostics_carry_locations(src, needle, line, col):
    ds = diagnostics(src)
    assert ds, src
    d = ds[0]
    assert needle in d.message
    assert (d.line, d.column) == (line, col)


def test_no_diagnostics_for_valid_source():
    assert diagnostics("a = [0:0:1];\nassert on_null(dual(a));") == []


def test_evaluate_examples():
    ev = run_source("q = quadrance([0:0:1],[1:0:2]);\n"
                    "assert eq(spread((1:0:0),(0:1:0)), 1);\n"
                    "assert on_null([1:1:1]);\n")
    assert ev.bindings["q"] == Fraction(-1, 3)
    good, bad = ev.assertions
    assert good.ok and good.value == (1, 1)
    assert not bad.ok and bad.value == 1 and bad.detail == "<a,a> = 1"
    assert not ev.ok and not ev.stopped


def test_failed_binding_names_the_kernel_error_and_stops():
    ev = run_source("m = midpoints([0:0:1],[1/2:0:1]);\nassert eq(1, 1);")
    (r,) = ev.results
    assert not r.ok and r.error.startswith("MidpointsAbsent")
    assert ev.stopped


def test_failed_assertion_does_not_stop():
    ev = run_source("assert perp([1:0:0],[1:0:0]);\nassert eq(quadrance([1:0:1],[0:0:1]), 0);\nb = [0:0:1];")
    first, second, third = ev.results
    assert not first.ok and first.value == 1
    assert not second.ok and second.error.startswith("NullArgument")
    assert third.ok and ev.bindings["b"] == Point(0, 0, 1)


def test_tuples_and_finite_fields():
    ev = run_source("#field fp 13\nn = null_points_on((0:1:0));\nassert on_null(n.1);\nassert on_null(n.2);")
    assert ev.ok
    assert ev.bindings["n"] == (Point(1, 0, 1, ctx=GF(13)), Point(-1, 0, 1, ctx=GF(13)))
    assert ev.ctx == GF(13)


def test_corpus_is_complete(corpus_files):
    names = {os.path.splitext(os.path.basename(f))[0] for f in corpus_files}
    assert EXPECTED_CORPUS <= names


def test_corpus_scripts_pass_and_round_trip(corpus_files):
    for path in corpus_files:
        src = open(path, encoding="utf-8").read()
        prog = parse(src)
        ev = evaluate(prog)
        assert ev.ok, f"{path}\n{ev.report()}"
        assert ev.assertions, path
        again = parse(pretty(prog))
        assert again == prog, path
        assert pretty(again) == pretty(prog)
        # evaluation is a pure function of the program
        assert evaluate(prog).report() == ev.report()
        assert evaluate(again).bindings == ev.bindings


def test_jumping_jack_script_values_satisfy_the_cubic():
    ev = run_source(open(os.path.join(CORPUS, "jumping_jack.uhg"), encoding="utf-8").read())
    r, s = ev.bindings["r"], ev.bindings["s"]
    assert jumping_jack_cubic(r, s) == 0


def test_48_64_script_values():
    ev = run_source(open(os.path.join(CORPUS, "48_64.uhg"), encoding="utf-8").read())
    vals = [v for v in ev.bindings.values() if isinstance(v, Fraction)]
    assert sorted(vals)[-1] == 1 and sorted(vals)[:2] == [-8, -8]


coords = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@given(st.lists(st.tuples(coords, coords, coords).filter(lambda t: any(t)), min_size=2, max_size=4))
def test_round_trip_on_generated_scripts(triples):
    lines = [f"p{i} = [{':'.join(str(c) for c in t)}];" for i, t in enumerate(triples)]
    lines.append("L = dual(p0);")
    lines.append("assert eq(p1, p1);")
    prog = parse("\n".join(lines))
    assert parse(pretty(prog)) == prog
    ev = evaluate(prog)
    assert ev.ok
    assert ev.bindings["L"] == Line(*triples[0])


def test_readme_example():
    text = open(os.path.join(os.path.dirname(CORPUS), "README.md"), encoding="utf-8").read()
    src = text.split("### Scripts\n\n```\n", 1)[1].split("```", 1)[0]
    ev = run_source(src)
    assert ev.ok, ev.report()
    assert len(ev.assertions) == 2
