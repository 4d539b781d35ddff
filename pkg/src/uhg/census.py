"""Exhaustive counts over the projective plane of GF(p)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional

from .duality import form_int
from .errors import InvalidModulus
from .field import GF, Field
from .metric import quadrance
from .projective import Line, Point


def projective_triples(p: int) -> Iterator[tuple[int, int, int]]:
    """Canonical representatives: leading nonzero coordinate equal to 1."""
    yield (0, 0, 1)
    for z in range(p):
        yield (0, 1, z)
    for y in range(p):
        for z in range(p):
            yield (1, y, z)


def square_class(n: int, p: int) -> str:
    n %= p
    if n == 0:
        return "zero"
    return "square" if pow(n, (p - 1) // 2, p) == 1 else "nonsquare"


@dataclass
class CensusRecord:
    p: int
    total_points: int
    null_points: int
    null_lines: int
    point_classes: Dict[str, int]
    line_classes: Dict[str, int]
    circles: Optional[Dict[str, Dict[int, int]]] = field(default=None)

    def lines(self) -> list[str]:
        out = [
            f"field\tfp:{self.p}",
            f"points\t{self.total_points}",
            f"null_points\t{self.null_points}",
            f"null_lines\t{self.null_lines}",
        ]
        for k in ("zero", "square", "nonsquare"):
            out.append(f"points_<a,a>_{k}\t{self.point_classes.get(k, 0)}")
        for k in ("zero", "square", "nonsquare"):
            out.append(f"lines_<L,L>_{k}\t{self.line_classes.get(k, 0)}")
        if self.circles:
            for cls, tally in self.circles.items():
                body = " ".join(f"{k}:{v}" for k, v in sorted(tally.items()))
                out.append(f"circles_center_{cls}\t{body}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def circle_tally(center: Point) -> Dict[int, int]:
    """``k -> #{x non-null : q(x, center) = k}`` over all of GF(p)."""
    ctx = center.ctx
    t: Counter = Counter()
    for v in projective_triples(ctx.p):
        if form_int(v, v) % ctx.p == 0:
            continue
        t[quadrance(Point._raw(ctx, v), center).v] += 1
    return dict(t)


def class_representatives(ctx: Field) -> Dict[str, Point]:
    """One non-null point for each square class of ``<a,a>``."""
    reps: Dict[str, Point] = {}
    for v in projective_triples(ctx.p):
        c = square_class(form_int(v, v), ctx.p)
        if c != "zero" and c not in reps:
            reps[c] = Point._raw(ctx, v)
        if len(reps) == 2:
            break
    return reps


def census(p: int, circles: bool = False) -> CensusRecord:
    """Exhaustive enumeration of the ``p^2 + p + 1`` points of the plane over GF(p).

    With ``circles`` the circle cardinalities are given for one center of each
    square class of ``<a,a>``; isometries act transitively on each class, so
    every other center of the class has the same tally.
    """
    if p == 2 or p < 2:
        raise InvalidModulus("census needs an odd prime")
    ctx = GF(p)
    pc: Counter = Counter()
    for v in projective_triples(p):
        pc[square_class(form_int(v, v), p)] += 1
    # lines are counted separately, through their own coordinates
    lc: Counter = Counter()
    total = 0
    for v in projective_triples(p):
        L = Line._raw(ctx, v)
        lc[square_class(form_int(L.coords, L.coords), p)] += 1
        total += 1
    rec = CensusRecord(p, total, pc["zero"], lc["zero"], dict(pc), dict(lc))
    if circles:
        rec.circles = {cls: circle_tally(c) for cls, c in class_representatives(ctx).items()}
    return rec
