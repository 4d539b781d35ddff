"""SVG figures of rational configurations.

Everything is exact up to :func:`project`, the one place where coordinates
become floats.  Lines are clipped against the viewport exactly (the box edges
are rational lines) and only the clipped endpoints are projected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .duality import is_null, perp_lines, perp_points
from .errors import IdenticalArguments
from .projective import Line, Point, incident, join, meet

SIZE = 600  # pixels per side of the square canvas
NULL_BLUE = "#1f4fd6"


class Projected(NamedTuple):
    """Affine image of a point, or a direction when the point is at infinity."""

    x: float
    y: float
    at_infinity: bool = False


def project(p: Point) -> Projected:
    """``[x:y:z] -> (x/z, y/z)``; ``z = 0`` gives the direction ``(x, y)`` flagged at infinity."""
    if not p.ctx.is_rational:
        raise ValueError("only rational points can be drawn")
    x, y, z = p.coords
    if z == 0:
        return Projected(float(x), float(y), True)
    return Projected(float(Fraction(x, z)), float(Fraction(y, z)), False)


def parse_viewport(text: str) -> Tuple[Fraction, Fraction, Fraction]:
    """``"cx,cy,hw"`` with exact decimal or fraction entries."""
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("viewport must be cx,cy,hw")
    cx, cy, hw = (Fraction(s.strip()) for s in parts)
    if hw <= 0:
        raise ValueError("viewport half-width must be positive")
    return cx, cy, hw


def _num(v: float) -> str:
    s = f"{v:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


@dataclass
class Scene:
    center: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))
    half_width: Fraction = Fraction(5, 2)
    points: List[Tuple[Point, str]] = field(default_factory=list)
    lines: List[Tuple[Line, str]] = field(default_factory=list)
    segments: List[Tuple[Point, Point]] = field(default_factory=list)

    @classmethod
    def with_viewport(cls, cx, cy, hw) -> "Scene":
        return cls((Fraction(cx), Fraction(cy)), Fraction(hw))

    def add_point(self, p: Point, label: str = ""):
        self.points.append((p, label))

    def add_line(self, L: Line, label: str = ""):
        self.lines.append((L, label))

    def add_segment(self, a: Point, b: Point):
        self.segments.append((a, b))

    # -- geometry ---------------------------------------------------------------

    def _box_lines(self) -> List[Line]:
        cx, cy = self.center
        h = self.half_width
        # x = k is (1:0:k) and y = k is (0:1:k) under ax + by - cz = 0
        return [Line(1, 0, cx - h), Line(1, 0, cx + h), Line(0, 1, cy - h), Line(0, 1, cy + h)]

    def _inside(self, p: Point, slack: Fraction = Fraction(0)) -> bool:
        x, y, z = p.coords
        if z == 0:
            return False
        cx, cy = self.center
        h = self.half_width + slack
        X, Y = Fraction(x, z), Fraction(y, z)
        return abs(X - cx) <= h and abs(Y - cy) <= h

    def clip(self, L: Line) -> Optional[Tuple[Point, Point]]:
        """Exact endpoints of ``L`` inside the viewport, or ``None``."""
        hits: List[Point] = []
        for B in self._box_lines():
            try:
                p = meet(L, B)
            except IdenticalArguments:
                continue
            if self._inside(p) and p not in hits:
                hits.append(p)
        if len(hits) < 2:
            return None
        hits.sort(key=lambda p: (Fraction(p.coords[0], p.coords[2]), Fraction(p.coords[1], p.coords[2])))
        return hits[0], hits[-1]

    def to_canvas(self, x: float, y: float) -> Tuple[float, float]:
        cx, cy = float(self.center[0]), float(self.center[1])
        h = float(self.half_width)
        s = SIZE / 2
        return (x - cx) / h * s + s, s - (y - cy) / h * s

    # -- serialization ------------------------------------------------------------

    def _boundary_arrow(self, dx: float, dy: float) -> Tuple[float, float, float, float]:
        """Canvas arrow from inside the border outwards in direction ``(dx, dy)``."""
        n = (dx * dx + dy * dy) ** 0.5
        ux, uy = dx / n, -dy / n  # canvas y points down
        s = SIZE / 2
        t = min(abs(s / ux) if ux else float("inf"), abs(s / uy) if uy else float("inf")) * 0.97
        tip = (s + ux * t, s + uy * t)
        tail = (tip[0] - ux * 18, tip[1] - uy * 18)
        return tail[0], tail[1], tip[0], tip[1]

    def _right_angle_markers(self) -> List[str]:
        out = []
        for i, (L, _) in enumerate(self.lines):
            for M, _ in self.lines[i + 1:]:
                if L == M or is_null(L) or is_null(M) or not perp_lines(L, M):
                    continue
                p = meet(L, M)
                if not self._inside(p):
                    continue
                out.append(self._corner(p, L, M))
        for i, (a, _) in enumerate(self.points):
            for b, _ in self.points[i + 1:]:
                if a == b or not perp_points(a, b):
                    continue
                seg = self.clip(join(a, b))
                # a small corner on the join marks the perpendicular pair
                if seg is not None and self._inside(a):
                    out.append(self._tick(a, b))
        return out

    def _direction(self, L: Line) -> Tuple[float, float]:
        a, b, _ = L.coords
        n = (a * a + b * b) ** 0.5
        return (-b / n, a / n) if n else (1.0, 0.0)

    def _corner(self, p: Point, L: Line, M: Line) -> str:
        P = project(p)
        x, y = self.to_canvas(P.x, P.y)
        (ux, uy), (vx, vy) = self._direction(L), self._direction(M)
        k = 9.0
        a = (x + k * ux, y - k * uy)
        b = (x + k * (ux + vx), y - k * (uy + vy))
        c = (x + k * vx, y - k * vy)
        pts = " ".join(f"{_num(px)},{_num(py)}" for px, py in (a, b, c))
        return f'<polyline class="right" points="{pts}" fill="none" stroke="#444" stroke-width="1"/>'

    def _tick(self, a: Point, b: Point) -> str:
        A = project(a)
        x, y = self.to_canvas(A.x, A.y)
        ux, uy = self._direction(join(a, b))
        k = 9.0
        # the corner sits on the join next to a, opening towards b
        p1 = (x + k * ux, y - k * uy)
        p2 = (p1[0] - k * uy, p1[1] - k * ux)
        p3 = (x - k * uy, y - k * ux)
        pts = " ".join(f"{_num(px)},{_num(py)}" for px, py in (p1, p2, p3))
        return f'<polyline class="perp" points="{pts}" fill="none" stroke="#444" stroke-width="1"/>'

    def svg(self) -> str:
        cx, cy = self.to_canvas(0.0, 0.0)
        r = SIZE / 2 / float(self.half_width)
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">',
            '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="6" refY="4" '
            'orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#b33"/></marker></defs>',
            f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
            f'<circle class="null-circle" cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}" '
            f'fill="none" stroke="{NULL_BLUE}" stroke-width="2"/>',
        ]
        for L, label in self.lines:
            seg = self.clip(L)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = (self.to_canvas(*project(p)[:2]) for p in seg)
            colour = NULL_BLUE if is_null(L) else "#222"
            out.append(
                f'<line class="line" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
                f'stroke="{colour}" stroke-width="1"/>'
            )
            if label:
                out.append(f'<text class="line-label" x="{_num(x2)}" y="{_num(y2)}" font-size="12" '
                           f'fill="#555">{_esc(label)}</text>')
        for a, b in self.segments:
            if not (self._inside(a) and self._inside(b)):
                continue
            (x1, y1), (x2, y2) = (self.to_canvas(*project(p)[:2]) for p in (a, b))
            out.append(f'<line class="segment" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" '
                       f'y2="{_num(y2)}" stroke="#b33" stroke-width="2"/>')
        out.extend(self._right_angle_markers())
        for p, label in self.points:
            P = project(p)
            if P.at_infinity:
                x1, y1, x2, y2 = self._boundary_arrow(P.x, P.y)
                out.append(f'<line class="infinite-point" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" '
                           f'y2="{_num(y2)}" stroke="#b33" stroke-width="2" marker-end="url(#arrowhead)"/>')
                x, y = x1, y1
            elif self._inside(p):
                x, y = self.to_canvas(P.x, P.y)
                fill = NULL_BLUE if is_null(p) else "#b33"
                out.append(f'<circle class="point" cx="{_num(x)}" cy="{_num(y)}" r="3" fill="{fill}"/>')
            else:
                continue
            if label:
                out.append(f'<text class="point-label" x="{_num(x + 5)}" y="{_num(y - 5)}" '
                           f'font-size="13">{_esc(label)}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def scene_from_bindings(bindings, viewport=(0, 0, Fraction(5, 2))) -> Scene:
    """Every bound point and line (tuple members as ``name.1``, ``name.2``)."""
    sc = Scene.with_viewport(*viewport)

    def add(v, label):
        if isinstance(v, Point):
            sc.add_point(v, label)
        elif isinstance(v, Line):
            sc.add_line(v, label)
        elif isinstance(v, tuple):
            for i, x in enumerate(v, start=1):
                add(x, f"{label}.{i}")

    for name, v in bindings.items():
        add(v, name)
    return sc


def distance_to_line(p: Projected, a: Projected, b: Projected) -> float:
    """Euclidean distance of ``p`` from the line through ``a`` and ``b`` (viewport units)."""
    dx, dy = b.x - a.x, b.y - a.y
    n = (dx * dx + dy * dy) ** 0.5
    return abs((p.x - a.x) * dy - (p.y - a.y) * dx) / n


def incidence_gaps(scene: Scene, pairs: Sequence[Tuple[Point, Line]]) -> List[float]:
    """Projected point-to-line distances for the given incident pairs (both drawn)."""
    gaps = []
    for p, L in pairs:
        if not incident(p, L):
            raise ValueError(f"{p} is not on {L}")
        seg = scene.clip(L)
        P = project(p)
        if seg is None or P.at_infinity:
            continue
        gaps.append(distance_to_line(P, project(seg[0]), project(seg[1])))
    return gaps
