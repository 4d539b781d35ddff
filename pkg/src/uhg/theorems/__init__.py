"""Theorem constructions, configuration generators and the check registry."""
from .constructions import (
    bolyai_limiting_lines,
    canonical_cubic,
    canonical_points,
    circle_conic,
    circumcenters,
    double_point,
    double_triangle,
    jumping_jack,
    jumping_jack_cubic,
    opposite_quadrances,
    opposite_spreads,
    orthocenter,
    ortholine,
    parabola_points,
    reciprocal_sum_48,
    second_double_point,
)
from .generators import Configuration, generate
from .registry import REGISTRY, THEOREM_IDS, CheckReport, run_check, theorem_ids

__all__ = [
    "CheckReport",
    "Configuration",
    "REGISTRY",
    "THEOREM_IDS",
    "bolyai_limiting_lines",
    "canonical_cubic",
    "canonical_points",
    "circle_conic",
    "circumcenters",
    "double_point",
    "double_triangle",
    "generate",
    "jumping_jack",
    "jumping_jack_cubic",
    "opposite_quadrances",
    "opposite_spreads",
    "orthocenter",
    "ortholine",
    "parabola_points",
    "reciprocal_sum_48",
    "run_check",
    "second_double_point",
    "theorem_ids",
]
