"""Sum of squared nearest-neighbor distances for points in a rectangle."""

from .closed_form import S3Value, s3, s3_breakpoints, s3_ratio
from .errors import BoundViolation, NNExtremalError
from .geom_core import (
    Configuration,
    NnSummary,
    Point,
    Rect,
    equality_config,
    gap,
    nn_distances,
    quadrisect,
    sigma,
    theorem_bound,
)
from .kernels import BACKEND
from .optimizer import OptReport, SearchParams, brute_force_grid, local_search, multistart

__all__ = [
    "BACKEND", "BoundViolation", "Configuration", "NNExtremalError", "NnSummary",
    "OptReport", "Point", "Rect", "S3Value", "SearchParams", "brute_force_grid",
    "equality_config", "gap", "local_search", "multistart", "nn_distances",
    "quadrisect", "s3", "s3_breakpoints", "s3_ratio", "sigma", "theorem_bound",
]
__version__ = "0.1.0"
