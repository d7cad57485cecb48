"""Pure-Python hot kernels.

Reference semantics for ``_ckernels.pyx``. Both backends perform the same
floating-point operations in the same order, so they agree bit for bit; keep
them in lockstep when editing either one.
"""

from __future__ import annotations

from itertools import combinations

INF = float("inf")


def sigma_xy(xs, ys) -> float:
    """Sum over points of the squared distance to the nearest other point."""
    n = len(xs)
    total = 0.0
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        best = INF
        for k in range(n):
            if k == i:
                continue
            dx = xi - xs[k]
            dy = yi - ys[k]
            d2 = dx * dx + dy * dy
            if d2 < best:
                best = d2
        total += best
    return total


def nearest_xy(xs, ys):
    """Per-point squared nearest distance and nearest index (lowest index on ties)."""
    n = len(xs)
    d2s = [0.0] * n
    idx = [0] * n
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        best = INF
        arg = -1
        for k in range(n):
            if k == i:
                continue
            dx = xi - xs[k]
            dy = yi - ys[k]
            d2 = dx * dx + dy * dy
            if d2 < best:
                best = d2
                arg = k
        d2s[i] = best
        idx[i] = arg
    return d2s, idx


def _collides(xs, ys, k, tol2):
    xk = xs[k]
    yk = ys[k]
    for j in range(len(xs)):
        if j == k:
            continue
        dx = xk - xs[j]
        dy = yk - ys[j]
        if dx * dx + dy * dy <= tol2:
            return True
    return False


def pattern_search(xs, ys, a, b, step, shrink, min_step, max_iters,
                   improve_tol, coincide_tol2):
    """Coordinate pattern search, maximizing ``sigma_xy`` in place.

    ``step`` is an absolute length. Returns ``(value, evals, sweeps,
    improving_sweeps)``; ``xs`` and ``ys`` hold the final configuration.
    """
    n = len(xs)
    px = [float(v) for v in xs]
    py = [float(v) for v in ys]
    cur = sigma_xy(px, py)
    evals = 1
    sweeps = 0
    improving = 0
    while sweeps < max_iters and step >= min_step:
        improved = False
        for c in range(2 * n):
            k = c >> 1
            coords = py if c & 1 else px
            hi = b if c & 1 else a
            old = coords[k]
            for sign in (1.0, -1.0):
                new = old + sign * step
                if new > hi:
                    new = hi
                elif new < 0.0:
                    new = 0.0
                if new == old:
                    continue
                coords[k] = new
                if _collides(px, py, k, coincide_tol2):
                    coords[k] = old
                    continue
                val = sigma_xy(px, py)
                evals += 1
                if val > cur + improve_tol:
                    cur = val
                    improved = True
                    break
                coords[k] = old
        sweeps += 1
        if improved:
            improving += 1
        else:
            step *= shrink
    for i in range(n):
        xs[i] = px[i]
        ys[i] = py[i]
    return cur, evals, sweeps, improving


def grid_max(n, m, a, b):
    """Exhaustive maximum of sigma over n-subsets of the (m+1)^2 lattice.

    Returns ``(best, indices)`` where lattice index ``L`` stands for the point
    ``((L // (m+1)) * a / m, (L % (m+1)) * b / m)``. The first maximizing
    subset in lexicographic order wins.
    """
    side = m + 1
    count = side * side
    lx = [(L // side) * a / m for L in range(count)]
    ly = [(L % side) * b / m for L in range(count)]
    dist = [[0.0] * count for _ in range(count)]
    for i in range(count):
        row = dist[i]
        for k in range(count):
            dx = lx[i] - lx[k]
            dy = ly[i] - ly[k]
            row[k] = dx * dx + dy * dy

    best = -1.0
    arg = None
    if n == 2:
        for i in range(count):
            row = dist[i]
            for j in range(i + 1, count):
                d = row[j]
                val = (0.0 + d) + d
                if val > best:
                    best = val
                    arg = (i, j)
    elif n == 3:
        for i in range(count):
            ri = dist[i]
            for j in range(i + 1, count):
                dij = ri[j]
                rj = dist[j]
                for k in range(j + 1, count):
                    dik = ri[k]
                    djk = rj[k]
                    val = (((0.0 + (dik if dik < dij else dij))
                            + (djk if djk < dij else dij))
                           + (djk if djk < dik else dik))
                    if val > best:
                        best = val
                        arg = (i, j, k)
    elif n == 4:
        for combo in combinations(range(count), 4):
            i, j, k, l = combo
            dij = dist[i][j]
            dik = dist[i][k]
            dil = dist[i][l]
            djk = dist[j][k]
            djl = dist[j][l]
            dkl = dist[k][l]
            d0 = dij
            if dik < d0:
                d0 = dik
            if dil < d0:
                d0 = dil
            d1 = dij
            if djk < d1:
                d1 = djk
            if djl < d1:
                d1 = djl
            d2 = dik
            if djk < d2:
                d2 = djk
            if dkl < d2:
                d2 = dkl
            d3 = dil
            if djl < d3:
                d3 = djl
            if dkl < d3:
                d3 = dkl
            val = (((0.0 + d0) + d1) + d2) + d3
            if val > best:
                best = val
                arg = combo
    else:
        raise ValueError("grid_max supports n in {2, 3, 4}")
    return best, arg
