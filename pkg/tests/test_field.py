from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uhg.errors import CharacteristicTwo, DivisionByZero, InvalidModulus, MixedContexts, ParseError
from uhg.field import GF, QQ, Fp, is_square, parse_field, sqrt_in_field

PRIMES = [3, 5, 7, 11, 13, 101]


def test_rationals_are_canonical_fractions():
    assert QQ(6) / QQ(4) == Fraction(3, 2)
    assert QQ.frac(-2, -4) == Fraction(1, 2)
    assert QQ.format(QQ.frac(4, -6)) == "-2/3"


def test_prime_field_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == 1
    assert F(1) / F(3) == F(5)
    assert -F(2) == F(5)
    assert F(3) ** -1 == F(5)
    assert F.frac(1, 2) == F(4)


def test_characteristic_two_and_composites_rejected():
    with pytest.raises(CharacteristicTwo):
        GF(2)
    with pytest.raises(InvalidModulus):
        GF(9)
    with pytest.raises(InvalidModulus):
        parse_field("fp:2")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(5).frac(1, 10)
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)


def test_mixed_contexts():
    with pytest.raises(MixedContexts):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(MixedContexts):
        GF(5)(1) + Fraction(1, 2)


def test_parse_and_format():
    assert QQ.parse(" -3/6 ") == Fraction(-1, 2)
    assert GF(11).parse("1/2") == GF(11)(6)
    with pytest.raises(ParseError):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("x")
    with pytest.raises(ParseError):
        GF(5).parse("1/5")
    assert parse_field("rational") is QQ
    assert parse_field("fp:13") == GF(13)
    assert parse_field("fp 13") == GF(13)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_square_roots(n, d):
    x = Fraction(n, d)
    r = sqrt_in_field(x * x)
    assert r is not None and r * r == x * x and r >= 0


def test_rational_non_squares():
    for x in (Fraction(2), Fraction(-1), Fraction(3, 4), Fraction(8, 9)):
        assert not is_square(x)
        assert QQ.sqrt(x) is None


@pytest.mark.parametrize("p", PRIMES)
def test_square_detection_matches_brute_force(p):
    F = GF(p)
    squares = {(i * i) % p for i in range(p)}
    for x in F.elements():
        assert F.is_square(x) == (x.v in squares)
        r = F.sqrt(x)
        assert (r is not None) == (x.v in squares)
        if r is not None:
            assert r * r == x


def test_tonelli_shanks_on_a_large_prime():
    # 10007 = 1 mod 2 only once, 1000003 has p = 3 mod 4; 998244353 exercises the loop
    p = 998244353
    F = GF(p)
    for v in (2, 3, 5, 12345, 998244352):
        x = F(v)
        r = F.sqrt(x)
        if r is not None:
            assert r * r == x
        assert (r is not None) == F.is_square(x)


@given(st.sampled_from(PRIMES), st.integers(), st.integers())
def test_prime_field_is_a_field(p, a, b):
    F = GF(p)
    x, y = F(a), F(b)
    assert (x + y) - y == x
    assert x * (y + 1) == x * y + x
    if y != 0:
        assert (x / y) * y == x


def test_fp_pickles_and_hashes():
    import pickle
    x = Fp(3, 7)
    assert pickle.loads(pickle.dumps(x)) == x
    assert pickle.loads(pickle.dumps(GF(7))) == GF(7)
    assert len({Fp(3, 7), Fp(10, 7)}) == 1
