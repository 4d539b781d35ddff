"""Universal hyperbolic geometry over exact fields.

Points ``[x:y:z]`` and lines ``(a:b:c)`` live in the projective plane over the
rationals or a prime field; the null circle ``x^2 + y^2 = z^2`` supplies
duality, perpendicularity, quadrance and spread.
"""
from .duality import (
    altitude_line,
    altitude_point,
    base_line,
    base_point,
    conjugate_lines,
    conjugate_points,
    dual,
    is_null,
    midlines,
    midpoints,
    null_point_from_param,
    null_points_on,
    parallel_line,
    parallel_point,
    perp,
    reflect,
    reflect_line,
    reflect_point,
)
from .errors import DegenerateError, UHGError
from .field import GF, QQ, Field, parse_field
from .metric import law_residual, napier_solve, quadrance, quadrea, spread, triangle_metrics
from .projective import INF, Line, Point, collinear, concurrent, cross_ratio, incident, join, meet

__version__ = "0.1.0"

__all__ = [
    "DegenerateError",
    "Field",
    "GF",
    "INF",
    "Line",
    "Point",
    "QQ",
    "UHGError",
    "altitude_line",
    "altitude_point",
    "base_line",
    "base_point",
    "collinear",
    "concurrent",
    "conjugate_lines",
    "conjugate_points",
    "cross_ratio",
    "dual",
    "incident",
    "is_null",
    "join",
    "law_residual",
    "meet",
    "midlines",
    "midpoints",
    "napier_solve",
    "null_point_from_param",
    "null_points_on",
    "parallel_line",
    "parallel_point",
    "parse_field",
    "perp",
    "quadrance",
    "quadrea",
    "reflect",
    "reflect_line",
    "reflect_point",
    "spread",
    "triangle_metrics",
]
