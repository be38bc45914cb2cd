"""冪級数演算モジュール."""
from .arithmetic import (
    DEFAULT_CONTOUR_POINTS,
    DEFAULT_CONTOUR_RADIUS,
    SeriesError,
    ZeroConstantTerm,
    contour_point_count,
    series_compose,
    series_divide,
    series_exp,
    series_from_function,
    series_log,
    series_mul,
    series_pow,
    series_reciprocal,
)

__all__ = [
    "series_log",
    "series_exp",
    "series_pow",
    "series_compose",
    "series_mul",
    "series_reciprocal",
    "series_divide",
    "series_from_function",
    "contour_point_count",
    "DEFAULT_CONTOUR_RADIUS",
    "DEFAULT_CONTOUR_POINTS",
    "SeriesError",
    "ZeroConstantTerm",
]
