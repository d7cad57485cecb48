"""Search for configurations that maximize the nearest-neighbor objective.

The objective is a sum of minima of quadratics: piecewise smooth, with kinks
wherever a nearest neighbor switches. Local search is therefore a
derivative-free coordinate pattern search. ``multistart`` runs it from many
seeded uniform starts; ``brute_force_grid`` is an exhaustive lattice oracle
for small ``n``.

Every report is checked against ``2a^2 + 2b^2``. Exceeding it raises
:class:`~nn_extremal.errors.BoundViolation`, since that would be either a bug
or a counterexample.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from ._rng import SplitMix64, derive_seed
from .closed_form import s3
from .errors import BoundViolation, BudgetExceededError, NNExtremalError, PreconditionError
from .geom_core import Configuration, Point, Rect, theorem_bound

log = logging.getLogger(__name__)

IMPROVE_TOL = 1e-12
COINCIDE_TOL = 1e-12
BOUND_TOL = 1e-9
GRID_BUDGET = 10_000_000
THREADS_ENV = "NN_EXTREMAL_THREADS"


@dataclass(frozen=True)
class SearchParams:
    restarts: int = 32
    init_step: float = 0.25
    shrink: float = 0.5
    min_step: float = 1e-9
    max_iters: int = 100_000
    seed: int = 0
    anneal: bool = False
    anneal_steps: int = 4000
    anneal_t0: float = 0.05
    anneal_cooling: float = 0.998
    workers: int | None = None

    def validate(self, rect: Rect) -> None:
        if self.restarts < 1:
            raise NNExtremalError(f"restarts must be positive, got {self.restarts}")
        if self.init_step <= 0 or self.min_step <= 0:
            raise NNExtremalError("init_step and min_step must be positive")
        if not 0 < self.shrink < 1:
            raise NNExtremalError(f"shrink must lie in (0, 1), got {self.shrink}")
        if self.min_step >= self.init_step * min(rect.a, rect.b):
            raise NNExtremalError("min_step must be below init_step * min(a, b)")
        if self.max_iters < 1:
            raise NNExtremalError("max_iters must be positive")
        if not 0 <= self.seed < 2**64:
            raise NNExtremalError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class OptReport:
    best_value: float
    best_config: Configuration
    bound: float
    gap: float
    evals: int
    restarts_run: int
    seed: int
    per_restart_values: tuple[float, ...] = ()
    status: str = "reference"
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "best_value": self.best_value,
            "best_config": self.best_config.to_dict(),
            "bound": self.bound,
            "gap": self.gap,
            "evals": self.evals,
            "restarts_run": self.restarts_run,
            "seed": self.seed,
            "per_restart_values": list(self.per_restart_values),
            "status": self.status,
            "stats": self.stats,
        }


def supremum_status(rect: Rect, n: int) -> str:
    """``"conjectural"`` where no exact supremum is known, else ``"reference"``."""
    if n >= 5 or (n == 4 and rect.a != rect.b):
        return "conjectural"
    return "reference"


def _check_bound(rect: Rect, value: float) -> None:
    bound = theorem_bound(rect)
    if value > bound + BOUND_TOL * max(1.0, rect.scale):
        raise BoundViolation(
            f"sum {value!r} exceeds 2a^2+2b^2 = {bound!r} for a={rect.a}, b={rect.b}"
        )


def _make_report(config, value, evals, restarts_run, seed, per_restart, stats) -> OptReport:
    rect = config.rect
    _check_bound(rect, value)
    bound = theorem_bound(rect)
    return OptReport(value, config, bound, bound - value, evals, restarts_run, seed,
                     tuple(per_restart), supremum_status(rect, config.n), stats)


def _pattern(config: Configuration, params: SearchParams):
    rect = config.rect
    xs, ys = config.buffers()
    value, evals, sweeps, improving = kernels.pattern_search(
        xs, ys, rect.a, rect.b, params.init_step * min(rect.a, rect.b), params.shrink,
        params.min_step, params.max_iters, IMPROVE_TOL, COINCIDE_TOL * COINCIDE_TOL,
    )
    end = config.with_points(zip(xs, ys))
    return end, value, evals, sweeps, improving


def local_search(start: Configuration, params: SearchParams) -> OptReport:
    """Coordinate pattern search from ``start``.

    Each of the 2n coordinates is probed at +step then -step (clamped to the
    rectangle); the first probe improving by more than 1e-12 is kept. A sweep
    with no improvement multiplies the step by ``shrink``. Probes that make
    two points coincide are skipped.
    """
    params.validate(start.rect)
    end, value, evals, sweeps, improving = _pattern(start, params)
    return _make_report(end, value, evals, 1, params.seed, (value,),
                        {"sweeps": sweeps, "improving_sweeps": improving})


def random_start(rect: Rect, n: int, rng: SplitMix64) -> Configuration:
    while True:
        pts = [Point(rng.uniform(0.0, rect.a), rng.uniform(0.0, rect.b)) for _ in range(n)]
        try:
            return Configuration(rect, tuple(pts))
        except NNExtremalError:
            continue


def anneal(start: Configuration, params: SearchParams, rng: SplitMix64):
    """Metropolis ascent with Gaussian single-point moves and geometric cooling.

    Returns ``(best_config, best_value, evals)``. Moves are clamped to the
    rectangle; moves creating coincident points are rejected.
    """
    rect = start.rect
    n = start.n
    scale = min(rect.a, rect.b)
    xs, ys = start.buffers()
    cur = kernels.sigma_xy(xs, ys)
    best = cur
    best_xy = (list(xs), list(ys))
    temp = params.anneal_t0 * rect.scale
    width = params.init_step * scale
    evals = 1
    tol2 = COINCIDE_TOL * COINCIDE_TOL
    for _ in range(params.anneal_steps):
        k = rng.randint(0, n - 1)
        ox, oy = xs[k], ys[k]
        xs[k] = min(max(ox + width * rng.gauss(), 0.0), rect.a)
        ys[k] = min(max(oy + width * rng.gauss(), 0.0), rect.b)
        if any((xs[k] - xs[j]) ** 2 + (ys[k] - ys[j]) ** 2 <= tol2 for j in range(n) if j != k):
            xs[k], ys[k] = ox, oy
            continue
        val = kernels.sigma_xy(xs, ys)
        evals += 1
        if val >= cur or rng.random() < math.exp((val - cur) / temp):
            cur = val
            if cur > best:
                best = cur
                best_xy = (list(xs), list(ys))
        else:
            xs[k], ys[k] = ox, oy
        temp *= params.anneal_cooling
        width = max(width * params.anneal_cooling, params.min_step)
    return start.with_points(zip(*best_xy)), best, evals


def worker_count(params: SearchParams) -> int:
    if params.workers is not None:
        w = params.workers
    else:
        try:
            w = int(os.environ.get(THREADS_ENV, "0"))
        except ValueError:
            raise NNExtremalError(f"{THREADS_ENV} must be an integer")
    if w <= 0:
        w = os.cpu_count() or 1
    return w


def _one_restart(rect, n, params, index, start=None):
    rng = SplitMix64(derive_seed(params.seed, index))
    if start is None:
        start = random_start(rect, n, rng)
    evals = 0
    if params.anneal:
        start, _, evals = anneal(start, params, rng)
    end, value, e, sweeps, _ = _pattern(start, params)
    return end, value, evals + e, sweeps


def multistart(rect: Rect, n: int, params: SearchParams,
               extra_starts: Sequence[Configuration] = ()) -> OptReport:
    """Best of ``params.restarts`` local searches from seeded uniform starts.

    Restart ``i`` draws its start from ``derive_seed(params.seed, i)``, so the
    result does not depend on the number of workers. ``extra_starts`` are
    searched after the random restarts (cross-seeding, e.g. with a lattice
    optimum). Ties go to the lowest restart index.
    """
    if n < 2:
        raise PreconditionError(f"degenerate set: n must be at least 2, got {n}")
    params.validate(rect)
    jobs = [(i, None) for i in range(params.restarts)]
    jobs += [(params.restarts + j, s) for j, s in enumerate(extra_starts)]
    workers = min(worker_count(params), len(jobs))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _one_restart(rect, n, params, *job), jobs))
    else:
        results = [_one_restart(rect, n, params, *job) for job in jobs]
    best_i = 0
    for i, res in enumerate(results):
        if res[1] > results[best_i][1]:
            best_i = i
    values = [res[1] for res in results]
    evals = sum(res[2] for res in results)
    log.debug("multistart n=%d a=%g b=%g best=%r from restart %d", n, rect.a, rect.b,
              values[best_i], best_i)
    return _make_report(results[best_i][0], values[best_i], evals, len(results), params.seed,
                        values, {"best_restart": best_i, "anneal": params.anneal})


def brute_force_grid(rect: Rect, n: int, m: int) -> OptReport:
    """Exact maximum over all n-subsets of the lattice ``{(i a/m, j b/m)}``."""
    if n not in (2, 3, 4):
        raise PreconditionError(f"brute_force_grid supports n in {{2, 3, 4}}, got {n}")
    if m < 1:
        raise PreconditionError(f"lattice resolution m must be >= 1, got {m}")
    count = math.comb((m + 1) ** 2, n)
    if count > GRID_BUDGET:
        raise BudgetExceededError(
            f"{count} subsets exceed the budget of {GRID_BUDGET}; use a smaller m"
        )
    best, idx = kernels.grid_max(n, m, rect.a, rect.b)
    side = m + 1
    pts = tuple(Point((L // side) * rect.a / m, (L % side) * rect.b / m) for L in idx)
    config = Configuration(rect, pts)
    return _make_report(config, best, count, 0, 0, (), {"m": m, "lattice_indices": list(idx)})


@dataclass(frozen=True)
class SweepRow:
    ratio: float
    found: float
    closed_form: float
    piece: int
    rel_err: float
    ratio_bound: float


def sweep_vs_s3(ratios: Sequence[float], params: SearchParams) -> list[SweepRow]:
    """Three-point multistart in ``Rect(1, r)`` against the closed form, per ratio."""
    rows = []
    for r in ratios:
        if not r > 0:
            raise NNExtremalError(f"ratios must be positive, got {r}")
        cf = s3(1.0, r)
        found = multistart(Rect(1.0, r), 3, params).best_value
        rows.append(SweepRow(r, found, cf.value, cf.piece, abs(found - cf.value) / cf.value,
                             cf.value / (1.0 + r * r)))
    return rows

