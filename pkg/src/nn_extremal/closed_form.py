"""Five-branch closed form for three points in an a x b rectangle.

The branch is chosen by the aspect ratio ``r = b/a`` against the breakpoints
``1/sqrt(3) < sqrt(3)/2 < 2/sqrt(3) < sqrt(3)``. At a breakpoint the two
adjacent branches agree and the lower branch index is reported.

The middle branch ``12(a^2 - sqrt(3)ab + b^2)`` is evaluated as stated. For
ratios strictly between sqrt(3)/2 and 2/sqrt(3) it is *not* an upper bound: the three-point configuration ``(0,0), (0,b), (a,b/2)`` already
gives ``a^2 + 9b^2/4`` (and its transpose ``9a^2/4 + b^2``), which is
larger there; see :func:`middle_branch_witness`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NNExtremalError, PreconditionError
from .geom_core import Configuration, Point, Rect

SQRT3 = math.sqrt(3.0)
RATIO_BOUND = 12.0 / 7.0
SQUARE_RATIO = 6.0 * (2.0 - SQRT3)


@dataclass(frozen=True)
class S3Value:
    value: float
    piece: int
    ratio: float


def s3_breakpoints() -> list[float]:
    return [1.0 / SQRT3, SQRT3 / 2.0, 2.0 / SQRT3, SQRT3]


def s3_branch(piece: int, a: float, b: float) -> float:
    """Evaluate a single branch regardless of which interval ``b/a`` falls in."""
    if piece == 1:
        return a * a + 9.0 * b * b / 4.0
    if piece == 2:
        return 3.0 * a * a / 4.0 + 3.0 * b * b
    if piece == 3:
        return 12.0 * (a * a - SQRT3 * a * b + b * b)
    if piece == 4:
        return 3.0 * a * a + 3.0 * b * b / 4.0
    if piece == 5:
        return 9.0 * a * a / 4.0 + b * b
    raise ValueError(f"piece must be in 1..5, got {piece}")


def s3_piece(ratio: float) -> int:
    for piece, r in enumerate(s3_breakpoints(), start=1):
        if ratio <= r:
            return piece
    return 5


def _check_sides(a: float, b: float) -> None:
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise NNExtremalError(f"sides must be positive and finite, got a={a}, b={b}")


def s3(a: float, b: float) -> S3Value:
    _check_sides(a, b)
    ratio = b / a
    piece = s3_piece(ratio)
    return S3Value(s3_branch(piece, a, b), piece, ratio)


def s3_ratio(a: float, b: float) -> float:
    return s3(a, b).value / (a * a + b * b)


def middle_branch_witness(rect: Rect) -> Configuration:
    """Three points beating the middle branch inside the middle ratio interval.

    For ``b <= a`` the points ``(0,0), (a,0), (a/2,b)`` give ``9a^2/4 + b^2``;
    for ``b > a`` the transposed triple gives ``a^2 + 9b^2/4``. Both formulas
    need ``sqrt(3)/2 <= b/a <= 2/sqrt(3)``, and there they exceed the middle
    branch of :func:`s3` everywhere except at the two endpoints.
    """
    a, b = rect.a, rect.b
    r = b / a
    lo, hi = SQRT3 / 2.0, 2.0 / SQRT3
    if not lo - 1e-12 <= r <= hi + 1e-12:
        raise PreconditionError(f"ratio b/a={r} outside the middle interval [{lo}, {hi}]")
    if b <= a:
        pts = (Point(0.0, 0.0), Point(a, 0.0), Point(a / 2, b))
    else:
        pts = (Point(0.0, 0.0), Point(0.0, b), Point(a, b / 2))
    return Configuration(rect, pts)


def middle_witness_value(a: float, b: float) -> float:
    return max(a * a + 9.0 * b * b / 4.0, 9.0 * a * a / 4.0 + b * b)
