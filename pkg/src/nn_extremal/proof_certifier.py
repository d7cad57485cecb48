"""Numerical replay of the inequalities behind the 2a^2 + 2b^2 bound.

Each check reduces one inequality or algebraic identity to a residual value
and a verdict. Identities pass when ``|value| <= tol * (a^2 + b^2)``;
inequalities pass when ``value <= tol * (a^2 + b^2)``. Samplers draw
parameters from the stated ranges with :class:`~nn_extremal._rng.SplitMix64`
and always include the range corners, where the convexity arguments put the
maxima.

This samples; it does not prove anything.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ._rng import SplitMix64, derive_seed
from .errors import ContainmentError, PreconditionError
from .geom_core import (
    CONTAIN_TOL,
    Configuration,
    Point,
    Rect,
    dist_to_set,
    quadrisect,
    sigma,
    sigma_of,
    theorem_bound,
)

TOL_IDENTITY = 1e-9

IDENTITY = "identity"
INEQUALITY = "inequality"


@dataclass(frozen=True)
class ResidualReport:
    name: str
    value: float
    ok: bool
    params: dict = field(default_factory=dict)
    kind: str = INEQUALITY
    scale: float = 1.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": self.value,
            "ok": self.ok,
            "scale": self.scale,
            "params": self.params,
        }


def _report(name, kind, value, scale, params, tol) -> ResidualReport:
    if kind == IDENTITY:
        ok = abs(value) <= tol * scale
    else:
        ok = value <= tol * scale
    return ResidualReport(name, float(value), bool(ok), params, kind, scale)


def _sq(p, q) -> float:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def _require_in(p, x0, x1, y0, y1, what, tol=CONTAIN_TOL):
    if not (x0 - tol <= p[0] <= x1 + tol and y0 - tol <= p[1] <= y1 + tol):
        raise ContainmentError(
            f"{what} = ({p[0]}, {p[1]}) outside [{x0}, {x1}] x [{y0}, {y1}]"
        )


def _require_range(name, value, lo, hi, tol=CONTAIN_TOL):
    if not lo - tol <= value <= hi + tol:
        raise PreconditionError(f"{name}={value} outside [{lo}, {hi}]")


def _pts(points) -> list:
    return [[float(p[0]), float(p[1])] for p in points]


# -- quadrisection with every quadrant holding >= 2 points ------------------

def case1_superadditivity(config: Configuration, tol: float = TOL_IDENTITY) -> ResidualReport:
    """Global sum against the sum of within-quadrant sums."""
    quads = quadrisect(config)
    if min(quads.counts) < 2:
        raise PreconditionError(f"not Case 1: quadrant counts {quads.counts}")
    parts = 0.0
    for q in quads.quadrants:
        parts += sigma_of(q.points)
    value = sigma(config) - parts
    return _report("case1.superadditivity", INEQUALITY, value, config.rect.scale,
                   {"a": config.rect.a, "b": config.rect.b, "points": _pts(config.points),
                    "counts": list(quads.counts)}, tol)


# -- one lone point beside a group of >= 2 ----------------------------------

def lemma1_residual(rect: Rect, p1: Sequence[Sequence[float]], q: Sequence[float],
                    tol: float = TOL_IDENTITY) -> ResidualReport:
    """``sigma(p1) + d(q, p1)^2 - (a^2 + b^2)`` for p1 in R1 and q in R2."""
    a, b = rect.a, rect.b
    for i, p in enumerate(p1):
        _require_in(p, 0.0, a / 2, 0.0, b / 2, f"p1[{i}]")
    _require_in(q, a / 2, a, 0.0, b / 2, "q")
    group = Configuration(rect, tuple(Point(*p) for p in p1))
    d = dist_to_set(q, group.points)
    value = sigma(group) + d * d - rect.scale
    return _report("lemma1", INEQUALITY, value, rect.scale,
                   {"a": a, "b": b, "p1": _pts(p1), "q": [q[0], q[1]]}, tol)


# -- three points ------------------------------------------------------------

def _b6(a, b, u, v) -> float:
    p1, p2, p3 = (0.0, 0.0), (u, b), (a, v)
    return _sq(p1, p2) + _sq(p1, p3) + _sq(p2, p3)


def _check_uv(a, b, u, v):
    _require_range("u", u, 0.0, a)
    _require_range("v", v, 0.0, b)


def case6_identity(a, b, u, v, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_uv(a, b, u, v)
    b6 = _b6(a, b, u, v)
    value = b6 / 2 - (a * a + b * b) + (a - u) * u + (b - v) * v
    return _report("case6.identity", IDENTITY, value, a * a + b * b,
                   {"a": a, "b": b, "u": u, "v": v, "B6": b6}, tol)


def case6_bound(a, b, u, v, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_uv(a, b, u, v)
    b6 = _b6(a, b, u, v)
    return _report("case6.bound", INEQUALITY, b6 - 2 * (a * a + b * b), a * a + b * b,
                   {"a": a, "b": b, "u": u, "v": v, "B6": b6}, tol)


# -- four points, one inside the triangle of the other three -----------------

def b71(a, b, u, v, s, t) -> float:
    p1, p2, p3 = (0.0, 0.0), (u, b), (a, v)
    r = 1.0 - s - t
    p4 = (r * p1[0] + s * p2[0] + t * p3[0], r * p1[1] + s * p2[1] + t * p3[1])
    d1, d2, d3 = _sq(p4, p1), _sq(p4, p2), _sq(p4, p3)
    return d1 + d2 + d3 + (r * d1 + s * d2 + t * d3)


def case71_vertex_formula(a, b, u_hi: bool, v_hi: bool, s, t) -> float:
    """Closed form of ``B71 - (2a^2 + 2b^2)`` with (u, v) at a rectangle vertex."""
    w = s + t
    if not u_hi and not v_hi:
        return a * a * (t - 1) * (2 * t + 1) + b * b * (s - 1) * (2 * s + 1)
    if u_hi and not v_hi:
        return a * a * w * (2 * w - 3) + b * b * (s - 1) * (2 * s + 1)
    if not u_hi and v_hi:
        return a * a * (t - 1) * (2 * t + 1) + b * b * w * (2 * w - 3)
    return (a * a + b * b) * w * (2 * w - 3)


def case71_corner_formula(a, b, u, v, corner: tuple[int, int]) -> float:
    """Closed form of ``B71 - (2a^2 + 2b^2)`` with (s, t) at a simplex corner."""
    if corner == (0, 0):
        return (u * u - a * a) + (v * v - b * b)
    if corner == (0, 1):
        return -(2 * a - u) * u - 2 * (b - v) * v - b * b
    if corner == (1, 0):
        return -(2 * b - v) * v - 2 * (a - u) * u - a * a
    raise ValueError(f"corner must be (0,0), (0,1) or (1,0), got {corner}")


def case71_residuals(a, b, u, v, s, t, tol: float = TOL_IDENTITY) -> list[ResidualReport]:
    _check_uv(a, b, u, v)
    if s < -CONTAIN_TOL or t < -CONTAIN_TOL or s + t > 1 + CONTAIN_TOL:
        raise PreconditionError(f"(s, t) = ({s}, {t}) outside the simplex s, t >= 0, s + t <= 1")
    scale = a * a + b * b
    bound = 2 * scale
    params = {"a": a, "b": b, "u": u, "v": v, "s": s, "t": t}
    out = []
    for u_hi, v_hi in itertools.product((False, True), repeat=2):
        uu = a if u_hi else 0.0
        vv = b if v_hi else 0.0
        tag = f"case71.vertex(u={'a' if u_hi else 0},v={'b' if v_hi else 0})"
        formula = case71_vertex_formula(a, b, u_hi, v_hi, s, t)
        direct = b71(a, b, uu, vv, s, t) - bound
        out.append(_report(tag + ".identity", IDENTITY, direct - formula, scale, params, tol))
        out.append(_report(tag + ".sign", INEQUALITY, formula, scale, params, tol))
    for corner in ((0, 0), (0, 1), (1, 0)):
        tag = f"case71.corner(s={corner[0]},t={corner[1]})"
        formula = case71_corner_formula(a, b, u, v, corner)
        direct = b71(a, b, u, v, float(corner[0]), float(corner[1])) - bound
        out.append(_report(tag + ".identity", IDENTITY, direct - formula, scale, params, tol))
        out.append(_report(tag + ".sign", INEQUALITY, formula, scale, params, tol))
    direct = b71(a, b, u, v, s, t)
    out.append(_report("case71.direct.sign", INEQUALITY, direct - bound, scale, params, tol))
    pts = [(0.0, 0.0), (u, b), (a, v), (s * u + t * a, s * b + t * v)]
    out.append(_report("case71.sigma_le_B71", INEQUALITY, sigma_of(pts) - direct,
                       scale, params, tol))
    return out


# -- four boundary points ----------------------------------------------------

def _cycle(pts) -> float:
    total = 0.0
    for i in range(4):
        total += _sq(pts[i], pts[(i + 1) % 4])
    return total


def _check_721(a, b, s, t, u, v):
    _require_range("s", s, 0.0, a)
    _require_range("t", t, 0.0, b)
    _require_range("u", u, 0.0, a)
    _require_range("v", v, 0.0, b)


def _b721(a, b, s, t, u, v) -> float:
    return _cycle([(s, 0.0), (0.0, t), (u, b), (a, v)])


def case721_identity(a, b, s, t, u, v, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_721(a, b, s, t, u, v)
    val = _b721(a, b, s, t, u, v)
    value = (val / 2 - (a * a + b * b)
             + (a - s) * s + (b - t) * t + (a - u) * u + (b - v) * v)
    return _report("case721.identity", IDENTITY, value, a * a + b * b,
                   {"a": a, "b": b, "s": s, "t": t, "u": u, "v": v, "B721": val}, tol)


def case721_bound(a, b, s, t, u, v, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_721(a, b, s, t, u, v)
    val = _b721(a, b, s, t, u, v)
    return _report("case721.bound", INEQUALITY, val - 2 * (a * a + b * b), a * a + b * b,
                   {"a": a, "b": b, "s": s, "t": t, "u": u, "v": v, "B721": val}, tol)


def _check_722(a, b, u, v, w):
    _require_range("u", u, 0.0, a)
    _require_range("v", v, 0.0, b)
    _require_range("w", w, 0.0, b)
    if not v > w:
        raise PreconditionError(f"ordering violated: need v > w, got v={v}, w={w}")


def _b722(a, b, u, v, w) -> float:
    return _cycle([(0.0, 0.0), (u, b), (a, v), (a, w)])


def case722_identity(a, b, u, v, w, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_722(a, b, u, v, w)
    val = _b722(a, b, u, v, w)
    value = val / 2 - (a * a + b * b) + (a - u) * u + (b - v) * v + (v - w) * w
    return _report("case722.identity", IDENTITY, value, a * a + b * b,
                   {"a": a, "b": b, "u": u, "v": v, "w": w, "B722": val}, tol)


def case722_bound(a, b, u, v, w, tol: float = TOL_IDENTITY) -> ResidualReport:
    _check_722(a, b, u, v, w)
    val = _b722(a, b, u, v, w)
    return _report("case722.bound", INEQUALITY, val - 2 * (a * a + b * b), a * a + b * b,
                   {"a": a, "b": b, "u": u, "v": v, "w": w, "B722": val}, tol)


# -- one quadrant with >= 2 points, three singleton quadrants ----------------

@dataclass(frozen=True)
class Case4Terms:
    s: float
    t: float
    sigma_all: float
    b4: float
    b4_tilde: float
    b4_tilde_at_ab: float
    b41: float
    b42: float
    b43: float
    final: float


def case4_terms(rect: Rect, p1, q2, q3, q4) -> Case4Terms:
    a, b = rect.a, rect.b
    for i, pt in enumerate(p1):
        _require_in(pt, 0.0, a / 2, 0.0, b / 2, f"p1[{i}]")
    _require_in(q2, a / 2, a, 0.0, b / 2, "q2")
    _require_in(q3, 0.0, a / 2, b / 2, b, "q3")
    _require_in(q4, a / 2, a, b / 2, b, "q4")
    group = Configuration(rect, tuple(Point(*pt) for pt in p1))
    xs = [pt.x for pt in group.points]
    ys = [pt.y for pt in group.points]
    s, t = max(xs), max(ys)
    S = group.points[xs.index(s)]
    T = group.points[ys.index(t)]
    p, q = q2
    u, v = q3
    sig1 = sigma(group)
    sigma_all = sigma_of(list(group.points) + [q2, q3, q4])
    b4 = sig1 + _sq(q2, S) + _sq(q3, T) + (_sq(q4, q2) + _sq(q4, q3)) / 2

    def tilde(p, v):
        return (2 * s * s + 2 * t * t
                + max(q * q, (q - t) ** 2) + max((u - s) ** 2, u * u)
                + (p - s) ** 2 + (v - t) ** 2
                + ((a - p) ** 2 + (b - q) ** 2) / 2
                + ((a - u) ** 2 + (b - v) ** 2) / 2)

    b41 = max(q * q, (q - t) ** 2) - b * q + q * q / 2
    b42 = max(u * u, (u - s) ** 2) - a * u + u * u / 2
    b43 = 1.5 * (a * a + b * b) - 2 * a * s - 2 * b * t + 3 * (s * s + t * t)
    final = 1.5 * (a * a + b * b) + 4 * (s - a / 2) * s + 4 * (t - b / 2) * t
    return Case4Terms(s, t, sigma_all, b4, tilde(p, v), tilde(a, b), b41, b42, b43, final)


def case4_chain(rect: Rect, p1, q2, q3, q4, tol: float = TOL_IDENTITY) -> list[ResidualReport]:
    """Every link of the majorant chain, one report per link."""
    m = case4_terms(rect, p1, q2, q3, q4)
    a, b = rect.a, rect.b
    scale = rect.scale
    params = {"a": a, "b": b, "p1": _pts(p1), "q2": list(q2), "q3": list(q3),
              "q4": list(q4), "s": m.s, "t": m.t}
    total = m.b41 + m.b42 + m.b43
    links = [
        ("case4.sigma_le_B4", INEQUALITY, m.sigma_all - m.b4),
        ("case4.B4_le_B4tilde", INEQUALITY, m.b4 - m.b4_tilde),
        ("case4.B4tilde_le_split", INEQUALITY, m.b4_tilde - total),
        ("case4.split_identity", IDENTITY, m.b4_tilde_at_ab - total),
        ("case4.B41_le_t2", INEQUALITY, m.b41 - m.t * m.t),
        ("case4.B42_le_s2", INEQUALITY, m.b42 - m.s * m.s),
        ("case4.split_le_final", INEQUALITY, total - m.final),
        ("case4.final_le_1.5scale", INEQUALITY, m.final - 1.5 * scale),
        ("case4.final_le_bound", INEQUALITY, m.final - theorem_bound(rect)),
    ]
    return [_report(name, kind, value, scale, params, tol) for name, kind, value in links]


# -- the bound itself on random configurations --------------------------------

def theorem_check(config: Configuration, tol: float = TOL_IDENTITY) -> ResidualReport:
    value = sigma(config) - theorem_bound(config.rect)
    return _report("theorem.bound", INEQUALITY, value, config.rect.scale,
                   {"a": config.rect.a, "b": config.rect.b, "n": config.n}, tol)


# -- samplers ------------------------------------------------------------------

_SNAP = 0.2


def _coord(rng: SplitMix64, lo: float, hi: float) -> float:
    """Uniform in [lo, hi], snapped to an endpoint with probability 0.2."""
    u = rng.random()
    if u < _SNAP / 2:
        return lo
    if u < _SNAP:
        return hi
    return rng.uniform(lo, hi)


def random_rect(rng: SplitMix64, max_aspect: float = 10.0) -> Rect:
    """Rectangle with log-uniform aspect ratio in [1/max_aspect, max_aspect]."""
    la = math.log(max_aspect)
    aspect = math.exp(rng.uniform(-la, la))
    size = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
    return Rect(size, size * aspect)


def _distinct(points, tol=1e-9):
    for i in range(len(points)):
        for k in range(i):
            if _sq(points[i], points[k]) <= tol * tol:
                return False
    return True


def _group(rng, k, x0, x1, y0, y1, open_x=False, open_y=False):
    """``k`` distinct points in the box, optionally excluding the upper x / y edge."""
    while True:
        pts = []
        for _ in range(k):
            x = _coord(rng, x0, x1)
            y = _coord(rng, y0, y1)
            if open_x and x >= x1:
                x = x0
            if open_y and y >= y1:
                y = y0
            pts.append((x, y))
        if _distinct(pts):
            return pts


def _sample_case1(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    pts = []
    boxes = [(0.0, a / 2, 0.0, b / 2), (a / 2, a, 0.0, b / 2),
             (0.0, a / 2, b / 2, b), (a / 2, a, b / 2, b)]
    for j, (x0, x1, y0, y1) in enumerate(boxes):
        # the split lines x = a/2, y = b/2 belong to the right / top quadrants
        pts += _group(rng, rng.randint(2, 4), x0, x1, y0, y1,
                      open_x=j in (0, 2), open_y=j in (0, 1))
    return [case1_superadditivity(Configuration(rect, tuple(pts)), tol)]


def _sample_lemma1(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    p1 = _group(rng, rng.randint(2, 5), 0.0, a / 2, 0.0, b / 2)
    q = (_coord(rng, a / 2, a), _coord(rng, 0.0, b / 2))
    return [lemma1_residual(rect, p1, q, tol)]


def _sample_case6(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    u, v = _coord(rng, 0.0, a), _coord(rng, 0.0, b)
    return [case6_identity(a, b, u, v, tol), case6_bound(a, b, u, v, tol)]


def _simplex(rng):
    r = rng.random()
    if r < 0.05:
        return 0.0, 0.0
    if r < 0.10:
        return 1.0, 0.0
    if r < 0.15:
        return 0.0, 1.0
    s, t = rng.random(), rng.random()
    if s + t > 1.0:
        s, t = 1.0 - s, 1.0 - t
    if r < 0.25:
        # on the hypotenuse s + t = 1
        return s, 1.0 - s
    return s, t


def _sample_case71(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    u, v = _coord(rng, 0.0, a), _coord(rng, 0.0, b)
    s, t = _simplex(rng)
    return case71_residuals(a, b, u, v, s, t, tol)


def _sample_case721(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    s, u = _coord(rng, 0.0, a), _coord(rng, 0.0, a)
    t, v = _coord(rng, 0.0, b), _coord(rng, 0.0, b)
    return [case721_identity(a, b, s, t, u, v, tol), case721_bound(a, b, s, t, u, v, tol)]


def _sample_case722(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    u = _coord(rng, 0.0, a)
    while True:
        v, w = _coord(rng, 0.0, b), _coord(rng, 0.0, b)
        if v != w:
            break
    if v < w:
        v, w = w, v
    return [case722_identity(a, b, u, v, w, tol), case722_bound(a, b, u, v, w, tol)]


def _sample_case4(rng, tol):
    rect = random_rect(rng)
    a, b = rect.a, rect.b
    p1 = _group(rng, rng.randint(2, 5), 0.0, a / 2, 0.0, b / 2)
    q2 = (_coord(rng, a / 2, a), _coord(rng, 0.0, b / 2))
    q3 = (_coord(rng, 0.0, a / 2), _coord(rng, b / 2, b))
    q4 = (_coord(rng, a / 2, a), _coord(rng, b / 2, b))
    return case4_chain(rect, p1, q2, q3, q4, tol)


def _sample_theorem(rng, tol):
    rect = random_rect(rng)
    n = rng.randint(2, 12)
    while True:
        pts = [(_coord(rng, 0.0, rect.a), _coord(rng, 0.0, rect.b)) for _ in range(n)]
        if _distinct(pts):
            return [theorem_check(Configuration(rect, tuple(pts)), tol)]


def _corners_case6(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0), (1.0, 3.0)):
        for u, v in itertools.product((0.0, a / 2, a), (0.0, b / 2, b)):
            out += [case6_identity(a, b, u, v, tol), case6_bound(a, b, u, v, tol)]
    return out


def _corners_case71(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0)):
        for u, v in itertools.product((0.0, a), (0.0, b)):
            for s, t in ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.5, 0.5), (1 / 3, 1 / 3)):
                out += case71_residuals(a, b, u, v, s, t, tol)
    return out


def _corners_case721(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0)):
        for s, u in itertools.product((0.0, a), repeat=2):
            for t, v in itertools.product((0.0, b), repeat=2):
                out += [case721_identity(a, b, s, t, u, v, tol),
                        case721_bound(a, b, s, t, u, v, tol)]
    return out


def _corners_case722(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0)):
        for u in (0.0, a):
            out += [case722_identity(a, b, u, b, 0.0, tol), case722_bound(a, b, u, b, 0.0, tol)]
    return out


def _corners_lemma1(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0)):
        corners1 = [(0.0, 0.0), (a / 2, 0.0), (0.0, b / 2), (a / 2, b / 2)]
        for i, j in itertools.combinations(range(4), 2):
            for q in ((a / 2, 0.0), (a, 0.0), (a / 2, b / 2), (a, b / 2)):
                out.append(lemma1_residual(Rect(a, b), [corners1[i], corners1[j]], q, tol))
    return out


def _corners_case4(tol):
    out = []
    for a, b in ((1.0, 1.0), (2.0, 1.0)):
        rect = Rect(a, b)
        for p1 in ([(0.0, 0.0), (a / 2, b / 2)], [(0.0, 0.0), (a / 2, 0.0)],
                   [(0.0, b / 2), (a / 2, 0.0)]):
            for q2, q3 in itertools.product(((a / 2, 0.0), (a, b / 2), (a, 0.0)),
                                            ((0.0, b), (a / 2, b / 2), (0.0, b / 2))):
                out += case4_chain(rect, p1, q2, q3, (a, b), tol)
    return out


@dataclass(frozen=True)
class Family:
    name: str
    sample: Callable
    corners: Callable | None = None


FAMILIES: tuple[Family, ...] = (
    Family("lemma1", _sample_lemma1, _corners_lemma1),
    Family("case1", _sample_case1),
    Family("case4", _sample_case4, _corners_case4),
    Family("case6", _sample_case6, _corners_case6),
    Family("case71", _sample_case71, _corners_case71),
    Family("case721", _sample_case721, _corners_case721),
    Family("case722", _sample_case722, _corners_case722),
    Family("theorem", _sample_theorem),
)


def family_names() -> list[str]:
    return [f.name for f in FAMILIES]


def run_family(name: str, trials: int, seed: int, tol: float = TOL_IDENTITY) -> list[ResidualReport]:
    """Corner cases followed by ``trials`` random instances.

    Trial ``i`` uses its own derived seed, so any subset of trials can be
    recomputed independently and in any order.
    """
    index = family_names().index(name)
    fam = FAMILIES[index]
    family_seed = derive_seed(seed, index)
    out = list(fam.corners(tol)) if fam.corners else []
    for i in range(trials):
        out += fam.sample(SplitMix64(derive_seed(family_seed, i)), tol)
    return out


@dataclass
class CertifySummary:
    total: int
    failed: int
    by_family: dict

    @property
    def ok(self) -> bool:
        return self.failed == 0


def certify(trials: int = 1000, seed: int = 1, tol: float = TOL_IDENTITY,
            families: Sequence[str] | None = None):
    """Run every residual family; returns ``(reports, summary)``."""
    names = list(families) if families else family_names()
    reports: list[ResidualReport] = []
    by_family = {}
    for name in names:
        rs = run_family(name, trials, seed, tol)
        bad = sum(not r.ok for r in rs)
        worst = max((r.value / r.scale if r.kind == INEQUALITY else abs(r.value) / r.scale)
                    for r in rs)
        by_family[name] = {"reports": len(rs), "failed": bad, "worst_normalized": worst}
        reports += rs
    failed = sum(v["failed"] for v in by_family.values())
    return reports, CertifySummary(len(reports), failed, by_family)
