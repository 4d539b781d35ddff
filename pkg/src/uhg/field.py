"""Exact field arithmetic: the rationals and odd prime fields.

Rational elements are plain :class:`fractions.Fraction` values (always in
lowest terms with a positive denominator).  Prime-field elements are
:class:`Fp` residues.  A :class:`Field` object is the context that knows how
to build, parse, test and take square roots of its elements.
"""
from __future__ import annotations

import operator
import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional, Union

from .errors import (
    CharacteristicTwo,
    DivisionByZero,
    InvalidModulus,
    MixedContexts,
    ParseError,
)

# Exhaustive square-root tables are used below this modulus.
TABLE_LIMIT = 10_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """A residue modulo an odd prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise MixedContexts(f"GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise MixedContexts(f"GF({self.p}) and a rational")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) * self.inverse()

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Element = Union[Fraction, Fp]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Field:
    """A field context: ``Field()`` for the rationals, ``Field(p)`` for GF(p).

    Use :data:`QQ` and :func:`GF` rather than constructing directly.
    """

    __slots__ = ("p",)

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if p == 2:
                raise CharacteristicTwo("characteristic two is not supported")
            if not _is_prime(p):
                raise InvalidModulus(f"{p} is not prime")
        self.p = p

    # -- identity ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def name(self) -> str:
        """Command-line spelling: ``rational`` or ``fp:P``."""
        return "rational" if self.p is None else f"fp:{self.p}"

    def __reduce__(self):
        return (Field, (self.p,))

    # -- construction --------------------------------------------------------

    @property
    def zero(self) -> Element:
        return self(0)

    @property
    def one(self) -> Element:
        return self(1)

    def __call__(self, x) -> Element:
        p = self.p
        if isinstance(x, str):
            return self.parse(x)
        if p is None:
            if isinstance(x, Fp):
                raise MixedContexts("rational context given a GF(p) element")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot convert {x!r} to a rational")
        if isinstance(x, Fp):
            if x.p != p:
                raise MixedContexts(f"GF({x.p}) element in GF({p})")
            return x
        if isinstance(x, int):
            return Fp(x, p)
        if isinstance(x, Fraction):
            return Fp(x.numerator, p) / Fp(x.denominator, p)
        raise TypeError(f"cannot convert {x!r} to GF({p})")

    def frac(self, num: int, den: int) -> Element:
        """The element ``num / den`` built from two integers."""
        if self.p is None:
            if den == 0:
                raise DivisionByZero("division by zero")
            return Fraction(num, den)
        if den % self.p == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return Fp(num * pow(den, self.p - 2, self.p), self.p)

    def int_pair(self, x) -> tuple[int, int]:
        """Integer numerator/denominator representing ``x`` in this field."""
        x = self(x)
        if self.p is None:
            return x.numerator, x.denominator
        return x.v, 1

    def reduce(self, n: int) -> int:
        """Canonical integer representative (identity over the rationals)."""
        return n if self.p is None else n % self.p

    def is_zero_int(self, n: int) -> bool:
        return n == 0 if self.p is None else n % self.p == 0

    # -- text ------------------------------------------------------------------

    def parse(self, text: str) -> Element:
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ParseError(f"malformed number {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        try:
            return self.frac(num, den)
        except DivisionByZero:
            raise ParseError(f"{text!r} is not defined in {self!r}") from None

    def format(self, x) -> str:
        x = self(x)
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x.v)

    # -- squares ---------------------------------------------------------------

    def sqrt(self, x) -> Optional[Element]:
        """A square root of ``x`` in the field, or ``None``.

        The canonical root is the nonnegative one over the rationals and the
        smaller residue of the pair over GF(p).
        """
        x = self(x)
        if self.p is None:
            if x < 0:
                return None
            n, d = x.numerator, x.denominator
            rn, rd = isqrt(n), isqrt(d)
            if rn * rn != n or rd * rd != d:
                return None
            return Fraction(rn, rd)
        r = _sqrt_mod(x.v, self.p)
        return None if r is None else Fp(r, self.p)

    def is_square(self, x) -> bool:
        x = self(x)
        if self.p is None:
            return self.sqrt(x) is not None
        if x.v == 0:
            return True
        return pow(x.v, (self.p - 1) // 2, self.p) == 1

    # -- enumeration / sampling --------------------------------------------------

    def elements(self) -> Iterator[Element]:
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return (Fp(i, self.p) for i in range(self.p))

    def random_element(self, rng, bound: int = 9) -> Element:
        if self.p is None:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        return Fp(rng.randrange(self.p), self.p)

    def random_int(self, rng, bound: int = 9) -> int:
        """A random integer coordinate suitable for homogeneous triples."""
        if self.p is None:
            return rng.randint(-bound, bound)
        return rng.randrange(self.p)


QQ = Field()


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def parse_field(spec: str) -> Field:
    """Parse ``rational`` or ``fp:P`` (also ``fp P``)."""
    s = spec.strip().lower()
    if s in ("rational", "q", "qq"):
        return QQ
    m = re.match(r"^fp[:\s]\s*(\d+)$", s)
    if not m:
        raise ParseError(f"unknown field {spec!r}")
    return GF(int(m.group(1)))


def context_of(x) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"{x!r} is not a field element")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def arith(op: str, x, y=None):
    """Apply ``add``, ``sub``, ``mul``, ``div`` or ``neg`` to field elements."""
    if op == "neg":
        return -x
    cx = context_of(x)
    if context_of(y) != cx:
        raise MixedContexts(f"{cx!r} and {context_of(y)!r}")
    try:
        return _OPS[op](x, y)
    except ZeroDivisionError as exc:
        if isinstance(exc, DivisionByZero):
            raise
        raise DivisionByZero(str(exc)) from None


def sqrt_in_field(x) -> Optional[Element]:
    return context_of(x).sqrt(x)


def is_square(x) -> bool:
    return context_of(x).is_square(x)


# -- modular square roots ------------------------------------------------------


@lru_cache(maxsize=64)
def _root_table(p: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for r in range((p + 1) // 2):
        table.setdefault(r * r % p, r)
    return table


def _tonelli_shanks(n: int, p: int) -> Optional[int]:
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _sqrt_mod(n: int, p: int) -> Optional[int]:
    n %= p
    if p < TABLE_LIMIT:
        return _root_table(p).get(n)
    r = _tonelli_shanks(n, p)
    if r is None:
        return None
    return min(r, p - r)
