import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nn_extremal import kernels
from nn_extremal._rng import SplitMix64

from conftest import available_backends

coord = st.floats(0.0, 1.0, allow_nan=False)
points = st.lists(st.tuples(coord, coord), min_size=2, max_size=10)


def _brute_sigma(pts):
    return sum(min(math.dist(p, q) ** 2 for k, q in enumerate(pts) if k != i)
               for i, p in enumerate(pts))


@given(points)
def test_sigma_matches_brute_force(backend, pts):
    xs = kernels.as_buffer([p[0] for p in pts])
    ys = kernels.as_buffer([p[1] for p in pts])
    assert backend.sigma_xy(xs, ys) == pytest.approx(_brute_sigma(pts), rel=1e-12, abs=1e-15)


@given(points)
def test_nearest_ties_lowest_index(backend, pts):
    xs = kernels.as_buffer([p[0] for p in pts])
    ys = kernels.as_buffer([p[1] for p in pts])
    d2, idx = backend.nearest_xy(xs, ys)
    for i, p in enumerate(pts):
        cand = [(( p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2, k) for k, q in enumerate(pts) if k != i]
        best = min(c[0] for c in cand)
        assert d2[i] == best
        assert idx[i] == min(k for v, k in cand if v == best)


needs_compiled = pytest.mark.skipif("compiled" not in available_backends(),
                                    reason="compiled kernels not built")


@needs_compiled
@settings(max_examples=200)
@given(points)
def test_backends_agree_bitwise_on_sigma(pts):
    py, c = kernels.get_backend("python"), kernels.get_backend("compiled")
    xs = kernels.as_buffer([p[0] for p in pts])
    ys = kernels.as_buffer([p[1] for p in pts])
    assert py.sigma_xy(xs, ys) == c.sigma_xy(xs, ys)
    assert py.nearest_xy(xs, ys) == c.nearest_xy(xs, ys)


@needs_compiled
@pytest.mark.parametrize("n", [2, 3, 4, 7])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_backends_agree_bitwise_on_pattern_search(n, seed):
    g = SplitMix64(seed)
    x0 = [g.uniform(0, 2.0) for _ in range(n)]
    y0 = [g.uniform(0, 1.0) for _ in range(n)]
    out = []
    for name in ("python", "compiled"):
        xs, ys = kernels.as_buffer(x0), kernels.as_buffer(y0)
        res = kernels.get_backend(name).pattern_search(
            xs, ys, 2.0, 1.0, 0.25, 0.5, 1e-9, 100000, 1e-12, 1e-24)
        out.append((res, list(xs), list(ys)))
    assert out[0] == out[1]


@needs_compiled
@pytest.mark.parametrize("n,m", [(2, 6), (3, 6), (4, 3)])
def test_backends_agree_on_grid(n, m):
    assert (kernels.get_backend("python").grid_max(n, m, 1.5, 1.0)
            == kernels.get_backend("compiled").grid_max(n, m, 1.5, 1.0))


def test_pattern_search_respects_bounds_and_never_decreases(backend):
    g = SplitMix64(11)
    xs = kernels.as_buffer([g.uniform(0, 3) for _ in range(5)])
    ys = kernels.as_buffer([g.uniform(0, 2) for _ in range(5)])
    start = backend.sigma_xy(xs, ys)
    value, evals, sweeps, _ = backend.pattern_search(xs, ys, 3.0, 2.0, 0.5, 0.5, 1e-9,
                                                     100000, 1e-12, 1e-24)
    assert value >= start
    assert value == backend.sigma_xy(xs, ys)
    assert all(0 <= x <= 3 for x in xs) and all(0 <= y <= 2 for y in ys)


def test_pattern_search_stops_at_max_iters(backend):
    xs = kernels.as_buffer([0.4, 0.6])
    ys = kernels.as_buffer([0.4, 0.6])
    _, _, sweeps, _ = backend.pattern_search(xs, ys, 1.0, 1.0, 0.01, 0.5, 1e-9, 3, 1e-12, 1e-24)
    assert sweeps == 3


def test_pattern_search_rejects_coincidence(backend):
    # moving point 1 left by one step would land exactly on point 0
    xs = kernels.as_buffer([0.0, 0.5])
    ys = kernels.as_buffer([0.0, 0.0])
    backend.pattern_search(xs, ys, 0.5, 1e-3, 0.5, 0.5, 1e-9, 1000, 1e-12, 1e-24)
    assert (xs[0], ys[0]) != (xs[1], ys[1])


def test_grid_rejects_large_n(backend):
    with pytest.raises(ValueError):
        backend.grid_max(5, 2, 1.0, 1.0)
