"""Exact big-rational, polynomial, series and enclosure arithmetic."""

from .ball import (
    DEFAULT_PREC,
    ComplexBall,
    RealBall,
    ball_cexp,
    ball_cos,
    ball_decimal,
    ball_e,
    ball_exp,
    ball_log,
    ball_pi,
    ball_pow,
    ball_root,
    ball_sin,
    ball_sqrt,
    sqrt_down,
    sqrt_up,
)
from .poly import IntPoly, RatPoly, ball_eval_poly, parse_poly, poly_from_json
from .roots import complex_roots_with_radii
from .series import (
    TruncSeries,
    series_compose_poly,
    series_compose_series,
    series_inverse,
    series_power,
)

__all__ = [
    "DEFAULT_PREC",
    "ComplexBall",
    "RealBall",
    "IntPoly",
    "RatPoly",
    "TruncSeries",
    "ball_cexp",
    "ball_cos",
    "ball_decimal",
    "ball_e",
    "ball_eval_poly",
    "ball_exp",
    "ball_log",
    "ball_pi",
    "ball_pow",
    "ball_root",
    "ball_sin",
    "ball_sqrt",
    "complex_roots_with_radii",
    "parse_poly",
    "poly_from_json",
    "series_compose_poly",
    "series_compose_series",
    "series_inverse",
    "series_power",
    "sqrt_down",
    "sqrt_up",
]
