"""Seeded random configurations with degenerate-case rejection.

Every sampler takes the field context and a :class:`random.Random`; the same
seed always yields the same configuration.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from .. import _linalg
from ..duality import (
    altitude_line,
    is_null,
    null_point_from_param,
    reflect_point,
)
from ..errors import DegenerateConfiguration, GeneratorExhausted
from ..field import Field
from ..projective import INF, Line, Point, collinear, join, points_on

MAX_REJECTIONS = 64


@dataclass(frozen=True)
class Configuration:
    """Named bindings plus where they came from."""

    bindings: Dict[str, object]
    generator: str = ""
    seed: object = None
    predicates: tuple = field(default=())

    def __getitem__(self, key):
        return self.bindings[key]

    def __iter__(self):
        return iter(self.bindings)

    def describe(self) -> str:
        lines = [f"generator={self.generator} seed={self.seed}"]
        for k, v in self.bindings.items():
            lines.append(f"  {k} = {v}")
        return "\n".join(lines)


def _retry(fn: Callable, what: str, tries: int = MAX_REJECTIONS):
    for _ in range(tries):
        try:
            out = fn()
        except (DegenerateConfiguration, ValueError, ZeroDivisionError):
            continue
        if out is not None:
            return out
    raise GeneratorExhausted(f"could not sample {what} in {tries} attempts")


# -- basic samplers ------------------------------------------------------------------------


def random_triple(ctx: Field, rng: random.Random, bound: int = 9):
    while True:
        v = tuple(ctx.random_int(rng, bound) for _ in range(3))
        if any(not ctx.is_zero_int(c) for c in v):
            return v


def random_point(ctx: Field, rng, allow_null: bool = False, bound: int = 9) -> Point:
    def go():
        p = Point._raw(ctx, random_triple(ctx, rng, bound))
        return p if allow_null or not is_null(p) else None
    return _retry(go, "a point")


def random_line(ctx: Field, rng, allow_null: bool = False, bound: int = 9) -> Line:
    return random_point(ctx, rng, allow_null, bound).dual()


def random_param(ctx: Field, rng, bound: int = 9):
    if ctx.is_rational:
        if rng.random() < 0.02:
            return INF
        return ctx.random_element(rng, bound)
    k = rng.randrange(ctx.p + 1)
    return INF if k == ctx.p else ctx(k)


def random_null_points(ctx: Field, rng, n: int) -> list[Point]:
    """``n`` distinct null points from distinct parameters."""
    if ctx.p is not None and n > ctx.p + 1:
        raise GeneratorExhausted(f"only {ctx.p + 1} null points over GF({ctx.p})")
    seen: list[Point] = []
    for _ in range(MAX_REJECTIONS * n):
        p = null_point_from_param(random_param(ctx, rng), ctx)
        if p not in seen:
            seen.append(p)
            if len(seen) == n:
                return seen
    raise GeneratorExhausted(f"could not find {n} distinct null points")


def random_point_on(L: Line, rng, allow_null: bool = False, bound: int = 9, avoid=()) -> Point:
    ctx = L.ctx
    u, v = points_on(L)

    def go():
        s, t = ctx.random_int(rng, bound), ctx.random_int(rng, bound)
        w = tuple(s * a + t * b for a, b in zip(u.coords, v.coords))
        if all(ctx.is_zero_int(c) for c in w):
            return None
        p = Point._raw(ctx, w)
        if (not allow_null and is_null(p)) or p in avoid:
            return None
        return p
    return _retry(go, f"a point on {L}")


def random_line_through(a: Point, rng, allow_null: bool = False, bound: int = 9, avoid=()) -> Line:
    return random_point_on(a.dual(), rng, allow_null, bound, tuple(x.dual() for x in avoid)).dual()


def random_isometry(ctx: Field, rng, length: int = 2):
    """A product of reflections, returned as the list of mirrors."""
    return [random_point(ctx, rng, bound=4) for _ in range(length)]


def apply_isometry(mirrors, obj):
    from ..duality import reflect
    for m in mirrors:
        obj = reflect(obj, m)
    return obj


# -- triangles ----------------------------------------------------------------------------------


def is_generic_triangle(a1: Point, a2: Point, a3: Point) -> bool:
    """Non-collinear, no null points, no null lines."""
    if collinear(a1, a2, a3):
        return False
    if any(is_null(p) for p in (a1, a2, a3)):
        return False
    return not any(is_null(join(p, q)) for p, q in ((a2, a3), (a1, a3), (a1, a2)))


def random_triangle(ctx: Field, rng, bound: int = 9) -> tuple[Point, Point, Point]:
    def go():
        pts = tuple(random_point(ctx, rng, bound=bound) for _ in range(3))
        return pts if is_generic_triangle(*pts) else None
    return _retry(go, "a triangle")


def random_nondual_triangle(ctx: Field, rng, bound: int = 9):
    def go():
        a1, a2, a3 = random_triangle(ctx, rng, bound)
        for a, (p, q) in ((a1, (a2, a3)), (a2, (a1, a3)), (a3, (a1, a2))):
            if a.dual() == join(p, q):
                return None
        return a1, a2, a3
    return _retry(go, "a non-dual triangle")


def right_triangle(ctx: Field, rng):
    """Triangle with ``S3 = 1``: the lines through ``a3`` are perpendicular."""
    def go():
        a3 = random_point(ctx, rng)
        L1 = random_line_through(a3, rng)
        if is_null(L1):
            return None
        L2 = altitude_line(a3, L1)
        a2 = random_point_on(L1, rng, avoid=(a3,))
        a1 = random_point_on(L2, rng, avoid=(a3,))
        return (a1, a2, a3) if is_generic_triangle(a1, a2, a3) else None
    return _retry(go, "a right triangle")


def perpendicular_pair_triangle(ctx: Field, rng):
    """Triangle with ``a1`` perpendicular to ``a2`` (so ``q3 = 1``)."""
    def go():
        a1 = random_point(ctx, rng)
        a2 = random_point_on(a1.dual(), rng)
        a3 = random_point(ctx, rng)
        return (a1, a2, a3) if is_generic_triangle(a1, a2, a3) else None
    return _retry(go, "a triangle with perpendicular points")


def collinear_triple(ctx: Field, rng):
    def go():
        a1 = random_point(ctx, rng)
        a2 = random_point(ctx, rng)
        if a1 == a2:
            return None
        L = join(a1, a2)
        if is_null(L):
            return None
        a3 = random_point_on(L, rng)
        return a1, a2, a3
    return _retry(go, "three collinear points")


def concurrent_triple(ctx: Field, rng):
    a1, a2, a3 = collinear_triple(ctx, rng)
    return a1.dual(), a2.dual(), a3.dual()


def isosceles_triangle(ctx: Field, rng):
    """``q(a2,a3) = q(a1,a3)``: ``a2`` is the mirror image of ``a1`` in a point perpendicular to ``a3``."""
    def go():
        a1 = random_point(ctx, rng)
        a3 = random_point(ctx, rng)
        m = random_point_on(a3.dual(), rng)
        a2 = reflect_point(a1, m)
        return (a1, a2, a3) if is_generic_triangle(a1, a2, a3) else None
    return _retry(go, "an isosceles triangle")


# Reflections in [1:0:0] and [1:2:1] compose to a rotation of order three about
# [0:1:2]; their dual lines have spread 3/4.
_ROTATION_MIRRORS = ((1, 0, 0), (1, 2, 1))


def equilateral_triangle(ctx: Field, rng):
    def go():
        m, n = (Point._raw(ctx, v) for v in _ROTATION_MIRRORS)
        g = random_isometry(ctx, rng)
        m, n = apply_isometry(g, m), apply_isometry(g, n)
        a1 = random_point(ctx, rng)
        a2 = reflect_point(reflect_point(a1, n), m)
        a3 = reflect_point(reflect_point(a2, n), m)
        return (a1, a2, a3) if is_generic_triangle(a1, a2, a3) else None
    return _retry(go, "an equilateral triangle")


def midpoint_rich_triangle(ctx: Field, rng):
    """A triangle all of whose sides have midpoints.

    Over the rationals the three points are isometric images of one point,
    so all products ``<ai,ai><aj,aj>`` are squares; over GF(p) random
    triangles are searched.
    """
    from ..duality import midpoints

    def go():
        if ctx.is_rational:
            a1 = random_point(ctx, rng, bound=5)
            a2 = apply_isometry(random_isometry(ctx, rng, 1), a1)
            a3 = apply_isometry(random_isometry(ctx, rng, 1), a1)
        else:
            a1, a2, a3 = (random_point(ctx, rng) for _ in range(3))
        if not is_generic_triangle(a1, a2, a3):
            return None
        for p, q in ((a2, a3), (a1, a3), (a1, a2)):
            if midpoints(p, q) is None:
                return None
        return a1, a2, a3
    return _retry(go, "a triangle with midpoints", MAX_REJECTIONS * 4)


# -- conics ----------------------------------------------------------------------------------------


def random_invertible_matrix(ctx: Field, rng, bound: int = 4):
    def go():
        m = tuple(tuple(ctx.random_int(rng, bound) for _ in range(3)) for _ in range(3))
        return m if not ctx.is_zero_int(_linalg.det(m)) else None
    return _retry(go, "an invertible matrix")


def conic_image_form(M):
    """Symmetric matrix of the image of the null circle under ``x -> M x``."""
    A = _linalg.adjugate(M)
    J = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
    return _linalg.matmul(_linalg.matmul(_linalg.transpose(A), J), A)


def septagon_on_conic(ctx: Field, rng):
    """Seven points on a conic: the image of seven null points under a random matrix."""
    M = random_invertible_matrix(ctx, rng)
    nulls = random_null_points(ctx, rng, 7)
    pts = [Point._raw(ctx, _linalg.matvec(M, a.coords)) for a in nulls]
    return pts, conic_image_form(M)


def conic_value(C, p: Point) -> int:
    v = p.coords
    return sum(C[i][j] * v[i] * v[j] for i in range(3) for j in range(3))


GENERATORS = {
    "point": lambda ctx, rng: {"a": random_point(ctx, rng)},
    "line": lambda ctx, rng: {"L": random_line(ctx, rng)},
    "triangle": lambda ctx, rng: dict(zip(("a1", "a2", "a3"), random_nondual_triangle(ctx, rng))),
    "right_triangle": lambda ctx, rng: dict(zip(("a1", "a2", "a3"), right_triangle(ctx, rng))),
    "midpoint_triangle": lambda ctx, rng: dict(zip(("a1", "a2", "a3"), midpoint_rich_triangle(ctx, rng))),
    "null_quadrangle": lambda ctx, rng: dict(zip(("α1", "α2", "α3", "α4"), random_null_points(ctx, rng, 4))),
    "null_pentagon": lambda ctx, rng: dict(zip(("α1", "α2", "α3", "α4", "α5"), random_null_points(ctx, rng, 5))),
    "null_septagon": lambda ctx, rng: {f"α{i + 1}": p for i, p in enumerate(random_null_points(ctx, rng, 7))},
    "septagon_conic": lambda ctx, rng: {f"a{i + 1}": p for i, p in enumerate(septagon_on_conic(ctx, rng)[0])},
}


def generate(kind: str, seed, ctx: Optional[Field] = None) -> Configuration:
    """Deterministic configuration of the given kind from ``seed``."""
    from ..field import QQ

    ctx = ctx or QQ
    if kind not in GENERATORS:
        raise KeyError(f"unknown generator {kind!r}; known: {sorted(GENERATORS)}")
    rng = random.Random(f"{kind}:{seed}")
    return Configuration(GENERATORS[kind](ctx, rng), kind, seed)
