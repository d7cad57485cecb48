"""Point configurations in an a x b rectangle and the nearest-neighbor objective.

The objective is ``sigma(P) = sum_i d_i**2`` where ``d_i`` is the distance
from point ``i`` to its nearest other point. For any ``n >= 2`` points in the
rectangle ``[0, a] x [0, b]`` it never exceeds ``2*a**2 + 2*b**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import (
    ContainmentError,
    DegenerateSetError,
    NNExtremalError,
    NotDistinctError,
    PreconditionError,
)

CONTAIN_TOL = 1e-9
DISTINCT_TOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Rect:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise NNExtremalError(f"rectangle sides must be finite, got {self.a}, {self.b}")
        if self.a <= 0 or self.b <= 0:
            raise NNExtremalError(f"rectangle sides must be positive, got {self.a}, {self.b}")

    @property
    def diag(self) -> float:
        return math.hypot(self.a, self.b)

    @property
    def scale(self) -> float:
        """a^2 + b^2, the natural normalizer for squared lengths."""
        return self.a * self.a + self.b * self.b


def _coords(points: Iterable[Sequence[float]]):
    xs, ys = [], []
    for p in points:
        xs.append(float(p[0]))
        ys.append(float(p[1]))
    return kernels.as_buffer(xs), kernels.as_buffer(ys)


@dataclass(frozen=True)
class Configuration:
    """A rectangle and ``n >= 2`` distinct labeled points inside it."""

    rect: Rect
    points: tuple[Point, ...]
    contain_tol: float = field(default=CONTAIN_TOL, compare=False, repr=False)
    distinct_tol: float = field(default=DISTINCT_TOL, compare=False, repr=False)

    def __post_init__(self):
        pts = tuple(Point(float(p[0]), float(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise DegenerateSetError(f"degenerate set: need at least 2 points, got {len(pts)}")
        a, b, tol = self.rect.a, self.rect.b, self.contain_tol
        for i, (x, y) in enumerate(pts):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise NNExtremalError(f"point {i} has non-finite coordinates ({x}, {y})")
            if not (-tol <= x <= a + tol and -tol <= y <= b + tol):
                raise ContainmentError(
                    f"point {i} = ({x}, {y}) lies outside [0, {a}] x [0, {b}]"
                )
        d2, nearest = kernels.nearest_xy(*self.buffers())
        for i, v in enumerate(d2):
            if v <= self.distinct_tol * self.distinct_tol:
                raise NotDistinctError(
                    f"points not distinct: {i} and {nearest[i]} coincide within {self.distinct_tol}"
                )

    @property
    def n(self) -> int:
        return len(self.points)

    def buffers(self):
        return _coords(self.points)

    def with_points(self, points: Iterable[Sequence[float]]) -> "Configuration":
        return Configuration(self.rect, tuple(points), self.contain_tol, self.distinct_tol)

    def to_dict(self) -> dict:
        return {
            "rect": {"a": self.rect.a, "b": self.rect.b},
            "points": [[p.x, p.y] for p in self.points],
        }

    @classmethod
    def from_dict(cls, data: dict, contain_tol: float = CONTAIN_TOL,
                  distinct_tol: float = DISTINCT_TOL) -> "Configuration":
        try:
            rect = Rect(float(data["rect"]["a"]), float(data["rect"]["b"]))
            points = tuple(Point(float(x), float(y)) for x, y in data["points"])
        except (KeyError, TypeError, ValueError) as exc:
            raise NNExtremalError(f"malformed configuration: {exc}") from exc
        return cls(rect, points, contain_tol, distinct_tol)


@dataclass(frozen=True)
class NnSummary:
    d: tuple[float, ...]
    nearest: tuple[int, ...]
    sigma: float

    def to_dict(self) -> dict:
        return {"d": list(self.d), "nearest": list(self.nearest), "sigma": self.sigma}


def nn_distances(config: Configuration) -> NnSummary:
    """Nearest-neighbor distance of every point; ties go to the lowest index."""
    d2, nearest = kernels.nearest_xy(*config.buffers())
    total = 0.0
    for v in d2:
        total += v
    return NnSummary(tuple(math.sqrt(v) for v in d2), tuple(nearest), total)


def sigma(config: Configuration) -> float:
    return kernels.sigma_xy(*config.buffers())


def sigma_of(points: Sequence[Sequence[float]]) -> float:
    """Objective of a bare point list with no rectangle attached.

    Singletons count as 0 (they have no nearest neighbor); callers that need
    the strict ``n >= 2`` contract should build a :class:`Configuration`.
    """
    if len(points) < 2:
        return 0.0
    return kernels.sigma_xy(*_coords(points))


def dist_to_set(p: Sequence[float], points: Sequence[Sequence[float]]) -> float:
    """Shortest distance from ``p`` to any member of ``points``."""
    if not points:
        raise DegenerateSetError("distance to an empty set is undefined")
    return math.sqrt(min((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for q in points))


def theorem_bound(rect: Rect) -> float:
    return 2.0 * rect.a * rect.a + 2.0 * rect.b * rect.b


def gap(config: Configuration) -> float:
    return theorem_bound(config.rect) - sigma(config)


def equality_config(rect: Rect, kind: str) -> Configuration:
    """A configuration attaining the bound: ``"diagonal_pair"`` or ``"square_corners"``."""
    a, b = rect.a, rect.b
    if kind == "diagonal_pair":
        return Configuration(rect, (Point(0.0, 0.0), Point(a, b)))
    if kind == "square_corners":
        if abs(a - b) > 1e-12:
            raise PreconditionError(f"square required for square_corners, got {a} x {b}")
        return Configuration(
            rect, (Point(0.0, 0.0), Point(a, 0.0), Point(0.0, b), Point(a, b))
        )
    raise PreconditionError(f"unknown equality configuration kind {kind!r}")


@dataclass(frozen=True)
class Quadrant:
    """One of the four congruent half-size rectangles, with the points assigned to it."""

    x0: float
    y0: float
    x1: float
    y1: float
    points: tuple[Point, ...]
    indices: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.points)

    def contains(self, p: Sequence[float], tol: float = CONTAIN_TOL) -> bool:
        return (self.x0 - tol <= p[0] <= self.x1 + tol
                and self.y0 - tol <= p[1] <= self.y1 + tol)


@dataclass(frozen=True)
class Quadrisection:
    quadrants: tuple[Quadrant, Quadrant, Quadrant, Quadrant]

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return tuple(q.count for q in self.quadrants)

    def __getitem__(self, j: int) -> Quadrant:
        return self.quadrants[j]


def quadrant_index(rect: Rect, p: Sequence[float]) -> int:
    """0..3 for bottom-left, bottom-right, top-left, top-right (half-open split)."""
    right = p[0] >= rect.a / 2
    top = p[1] >= rect.b / 2
    return 2 * top + right


def quadrisect(config: Configuration) -> Quadrisection:
    rect = config.rect
    ha, hb = rect.a / 2, rect.b / 2
    buckets: list[list[int]] = [[], [], [], []]
    for i, p in enumerate(config.points):
        buckets[quadrant_index(rect, p)].append(i)
    bounds = [(0.0, 0.0, ha, hb), (ha, 0.0, rect.a, hb),
              (0.0, hb, ha, rect.b), (ha, hb, rect.a, rect.b)]
    quads = tuple(
        Quadrant(*bounds[j], tuple(config.points[i] for i in idx), tuple(idx))
        for j, idx in enumerate(buckets)
    )
    return Quadrisection(quads)
