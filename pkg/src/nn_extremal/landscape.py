"""One-dimensional slices of the objective.

Draw ``n`` seeded points in the rectangle, free the abscissa of one of them
and tabulate the objective as that abscissa sweeps ``[0, a]``. Slices show
the kinks and false local maxima that make the maximization hard.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from ._rng import SplitMix64
from .errors import NNExtremalError
from .geom_core import Rect

PERTURB = 1e-9
COINCIDE_TOL = 1e-12


@dataclass(frozen=True)
class SliceSpec:
    seed: int = 0
    n: int = 6
    moving_index: int = 0
    samples: int = 201
    rect: Rect = field(default_factory=lambda: Rect(1.0, 1.0))

    def __post_init__(self):
        if self.n < 2:
            raise NNExtremalError(f"degenerate set: n must be at least 2, got {self.n}")
        if not 0 <= self.moving_index < self.n:
            raise NNExtremalError(f"moving_index must lie in [0, {self.n}), got {self.moving_index}")
        if self.samples < 2:
            raise NNExtremalError(f"samples must be at least 2, got {self.samples}")


@dataclass(frozen=True)
class SliceSample:
    s: float
    sigma: float
    perturbed: bool = False


def slice_points(spec: SliceSpec) -> tuple[list[float], list[float]]:
    """The base points: x then y for each point in turn, from one SplitMix64 stream."""
    rng = SplitMix64(spec.seed)
    xs, ys = [], []
    for _ in range(spec.n):
        xs.append(rng.uniform(0.0, spec.rect.a))
        ys.append(rng.uniform(0.0, spec.rect.b))
    return xs, ys


def _coincides(xs, ys, k) -> bool:
    tol2 = COINCIDE_TOL * COINCIDE_TOL
    return any((xs[k] - xs[j]) ** 2 + (ys[k] - ys[j]) ** 2 <= tol2
               for j in range(len(xs)) if j != k)


def slice(spec: SliceSpec) -> list[SliceSample]:
    a = spec.rect.a
    px, py = slice_points(spec)
    xs, ys = kernels.as_buffer(px), kernels.as_buffer(py)
    k = spec.moving_index
    out = []
    for i in range(spec.samples):
        s = i * a / (spec.samples - 1)
        xs[k] = s
        perturbed = False
        if _coincides(xs, ys, k):
            s = s + PERTURB if s + PERTURB <= a else s - PERTURB
            xs[k] = s
            perturbed = True
        out.append(SliceSample(s, kernels.sigma_xy(xs, ys), perturbed))
    return out
