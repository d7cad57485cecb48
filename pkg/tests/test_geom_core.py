import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nn_extremal.errors import (
    ContainmentError,
    DegenerateSetError,
    NNExtremalError,
    NotDistinctError,
    PreconditionError,
)
from nn_extremal.geom_core import (
    Configuration,
    Point,
    Rect,
    dist_to_set,
    equality_config,
    gap,
    nn_distances,
    quadrisect,
    sigma,
    sigma_of,
    theorem_bound,
)


def cfg(rect, *pts):
    return Configuration(rect, tuple(Point(*p) for p in pts))


def test_two_points_are_mutual_neighbors():
    s = nn_distances(cfg(Rect(3, 4), (0, 0), (3, 4)))
    assert s.d == (5.0, 5.0)
    assert s.nearest == (1, 0)
    assert s.sigma == 50.0


def test_collinear():
    s = nn_distances(cfg(Rect(3, 1), (0, 0), (1, 0), (3, 0)))
    assert s.d == (1.0, 1.0, 2.0)
    assert s.nearest == (1, 0, 1)
    assert s.sigma == 6.0


def test_unit_square_corners(unit):
    s = nn_distances(equality_config(unit, "square_corners"))
    assert s.d == (1.0, 1.0, 1.0, 1.0)
    assert s.sigma == 4.0
    # (0,0) is equidistant from (1,0) and (0,1): lowest index wins
    assert s.nearest[0] == 1


def test_sigma_examples(unit):
    assert sigma(cfg(Rect(2, 3), (0, 0), (2, 3))) == 26.0
    assert sigma(equality_config(unit, "square_corners")) == 4.0
    tiny = sigma(cfg(unit, (0.5, 0.5), (0.5 + 1e-6, 0.5)))
    assert tiny == pytest.approx(2e-12, rel=1e-6)


@pytest.mark.parametrize("a,b,expected", [(1, 1, 4.0), (3, 4, 50.0), (1, 2, 10.0)])
def test_theorem_bound(a, b, expected):
    assert theorem_bound(Rect(a, b)) == expected


def test_gap_examples(unit):
    assert gap(equality_config(unit, "square_corners")) == 0.0
    assert gap(cfg(unit, (0, 0), (1, 1))) == 0.0
    assert gap(cfg(unit, (0.5, 0.5), (0.5001, 0.5))) == pytest.approx(4.0, abs=1e-6)


def test_equality_configs():
    c = equality_config(Rect(2, 3), "diagonal_pair")
    assert c.points == (Point(0, 0), Point(2, 3))
    assert sigma(c) == 26.0
    assert abs(gap(c)) <= 1e-12
    with pytest.raises(PreconditionError, match="square required"):
        equality_config(Rect(1, 2), "square_corners")
    with pytest.raises(PreconditionError):
        equality_config(Rect(1, 1), "triangle")


def test_errors(unit):
    with pytest.raises(DegenerateSetError, match="degenerate set"):
        cfg(unit, (0.1, 0.1))
    with pytest.raises(NotDistinctError, match="points not distinct"):
        cfg(unit, (0.1, 0.1), (0.1, 0.1 + 1e-13))
    with pytest.raises(ContainmentError):
        cfg(unit, (0.1, 0.1), (1.1, 0.5))
    with pytest.raises(NNExtremalError):
        Rect(0, 1)
    with pytest.raises(NNExtremalError):
        Rect(1, float("nan"))


def test_tolerances_are_configurable(unit):
    pts = (Point(0.1, 0.1), Point(1.0 + 5e-7, 0.5))
    with pytest.raises(ContainmentError):
        Configuration(unit, pts)
    Configuration(unit, pts, contain_tol=1e-6)
    close = (Point(0.1, 0.1), Point(0.1, 0.1 + 1e-10))
    with pytest.raises(NotDistinctError):
        Configuration(unit, close, distinct_tol=1e-9)


def test_containment_slack(unit):
    cfg(unit, (0.0, -5e-10), (1.0 + 5e-10, 1.0))


def test_json_round_trip(unit):
    c = cfg(Rect(1.5, 0.5), (0.1, 0.2), (1.4, 0.3))
    back = Configuration.from_dict(c.to_dict())
    assert back == c
    with pytest.raises(NNExtremalError, match="malformed"):
        Configuration.from_dict({"rect": {"a": 1}})


def test_sigma_of_and_dist_to_set():
    assert sigma_of([(0, 0)]) == 0.0
    assert sigma_of([(0, 0), (0, 2)]) == 8.0
    assert dist_to_set((3, 4), [(0, 0), (3, 0)]) == 4.0
    with pytest.raises(DegenerateSetError):
        dist_to_set((0, 0), [])


class TestQuadrisect:
    def test_two_per_corner(self, two_per_quadrant):
        assert quadrisect(two_per_quadrant).counts == (2, 2, 2, 2)

    def test_diagonal(self, unit):
        q = quadrisect(cfg(unit, (0, 0), (1, 1)))
        assert q.counts == (1, 0, 0, 1)
        assert q[3].indices == (1,)

    def test_center_goes_top_right(self, unit):
        q = quadrisect(cfg(unit, (0.5, 0.5), (0.1, 0.1)))
        assert q[3].points == (Point(0.5, 0.5),)
        assert q[0].points == (Point(0.1, 0.1),)

    def test_quadrant_bounds(self):
        q = quadrisect(cfg(Rect(4, 2), (0, 0), (4, 2)))
        assert (q[1].x0, q[1].y0, q[1].x1, q[1].y1) == (2, 0, 4, 1)
        assert (q[2].x0, q[2].y0, q[2].x1, q[2].y1) == (0, 1, 2, 2)


# -- properties -------------------------------------------------------------

@st.composite
def configurations(draw, max_n=12):
    a = draw(st.floats(0.1, 10.0))
    b = draw(st.floats(0.1, 10.0))
    n = draw(st.integers(2, max_n))
    xs = st.floats(0.0, a)
    ys = st.floats(0.0, b)
    pts = draw(st.lists(st.tuples(xs, ys), min_size=n, max_size=n,
                        unique_by=lambda p: (round(p[0], 6), round(p[1], 6))))
    try:
        return Configuration(Rect(a, b), tuple(Point(*p) for p in pts))
    except NotDistinctError:
        from hypothesis import reject
        reject()


@settings(max_examples=500)
@given(configurations())
def test_bound_holds(config):
    assert sigma(config) <= theorem_bound(config.rect) + 1e-9


@given(configurations(), st.floats(0.01, 100.0))
def test_scaling(config, lam):
    scaled = Configuration(Rect(config.rect.a * lam, config.rect.b * lam),
                           tuple(Point(p.x * lam, p.y * lam) for p in config.points),
                           contain_tol=1e-6)
    assert sigma(scaled) == pytest.approx(lam * lam * sigma(config), rel=1e-9)


@given(configurations(), st.randoms(use_true_random=False))
def test_permutation_invariance(config, rnd):
    pts = list(config.points)
    rnd.shuffle(pts)
    perm = config.with_points(pts)
    assert sorted(nn_distances(perm).d) == sorted(nn_distances(config).d)
    assert sigma(perm) == pytest.approx(sigma(config), rel=1e-12)


@given(configurations())
def test_summary_invariants(config):
    s = nn_distances(config)
    assert s.sigma == pytest.approx(sum(d * d for d in s.d), rel=1e-12)
    for i, (d, k) in enumerate(zip(s.d, s.nearest)):
        assert k != i
        assert d > 0
        assert d <= config.rect.diag * (1 + 1e-12)
        assert d == pytest.approx(math.dist(config.points[i], config.points[k]), rel=1e-12)


@given(configurations())
def test_quadrisect_properties(config):
    q = quadrisect(config)
    assert sum(q.counts) == config.n
    seen = sorted(i for quad in q.quadrants for i in quad.indices)
    assert seen == list(range(config.n))
    for quad in q.quadrants:
        assert all(quad.contains(p) for p in quad.points)
