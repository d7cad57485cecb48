# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pykernels`` operation for operation."""

from libc.stdlib cimport malloc, free

cdef double INF = float("inf")


cdef double _sigma(const double* xs, const double* ys, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i, k
    cdef double total = 0.0, best, dx, dy, d2, xi, yi
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


cdef bint _collides(const double* xs, const double* ys, Py_ssize_t n,
                    Py_ssize_t k, double tol2) noexcept nogil:
    cdef Py_ssize_t j
    cdef double dx, dy
    for j in range(n):
        if j == k:
            continue
        dx = xs[k] - xs[j]
        dy = ys[k] - ys[j]
        if dx * dx + dy * dy <= tol2:
            return True
    return False


def sigma_xy(const double[::1] xs, const double[::1] ys):
    return _sigma(&xs[0], &ys[0], xs.shape[0])


def nearest_xy(const double[::1] xs, const double[::1] ys):
    cdef Py_ssize_t n = xs.shape[0], i, k, arg
    cdef double best, dx, dy, d2
    d2s = [0.0] * n
    idx = [0] * n
    for i in range(n):
        best = INF
        arg = -1
        for k in range(n):
            if k == i:
                continue
            dx = xs[i] - xs[k]
            dy = ys[i] - ys[k]
            d2 = dx * dx + dy * dy
            if d2 < best:
                best = d2
                arg = k
        d2s[i] = best
        idx[i] = arg
    return d2s, idx


def pattern_search(double[::1] xs, double[::1] ys, double a, double b,
                   double step, double shrink, double min_step, long max_iters,
                   double improve_tol, double coincide_tol2):
    cdef Py_ssize_t n = xs.shape[0], c, k
    cdef double* px = &xs[0]
    cdef double* py = &ys[0]
    cdef double* coords
    cdef double cur, old, new, hi, val, sign
    cdef long evals = 1, sweeps = 0, improving = 0
    cdef int d
    cdef bint improved
    with nogil:
        cur = _sigma(px, py, n)
        while sweeps < max_iters and step >= min_step:
            improved = False
            for c in range(2 * n):
                k = c >> 1
                if c & 1:
                    coords = py
                    hi = b
                else:
                    coords = px
                    hi = a
                old = coords[k]
                for d in range(2):
                    sign = 1.0 if d == 0 else -1.0
                    new = old + sign * step
                    if new > hi:
                        new = hi
                    elif new < 0.0:
                        new = 0.0
                    if new == old:
                        continue
                    coords[k] = new
                    if _collides(px, py, n, k, coincide_tol2):
                        coords[k] = old
                        continue
                    val = _sigma(px, py, n)
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
    return cur, evals, sweeps, improving


def grid_max(int n, int m, double a, double b):
    if n < 2 or n > 4:
        raise ValueError("grid_max supports n in {2, 3, 4}")
    cdef Py_ssize_t side = m + 1
    cdef Py_ssize_t count = side * side
    cdef Py_ssize_t i, j, k, l, L
    cdef double* lx = <double*> malloc(count * sizeof(double))
    cdef double* ly = <double*> malloc(count * sizeof(double))
    cdef double* dist = <double*> malloc(count * count * sizeof(double))
    cdef double dx, dy, best = -1.0, val, dij, dik, dil, djk, djl, dkl
    cdef double d0, d1, d2, d3
    cdef Py_ssize_t bi = -1, bj = -1, bk = -1, bl = -1
    if lx == NULL or ly == NULL or dist == NULL:
        free(lx)
        free(ly)
        free(dist)
        raise MemoryError()
    try:
        for L in range(count):
            lx[L] = (L // side) * a / m
            ly[L] = (L % side) * b / m
        with nogil:
            for i in range(count):
                for k in range(count):
                    dx = lx[i] - lx[k]
                    dy = ly[i] - ly[k]
                    dist[i * count + k] = dx * dx + dy * dy
            if n == 2:
                for i in range(count):
                    for j in range(i + 1, count):
                        dij = dist[i * count + j]
                        val = (0.0 + dij) + dij
                        if val > best:
                            best = val
                            bi = i
                            bj = j
            elif n == 3:
                for i in range(count):
                    for j in range(i + 1, count):
                        dij = dist[i * count + j]
                        for k in range(j + 1, count):
                            dik = dist[i * count + k]
                            djk = dist[j * count + k]
                            val = (((0.0 + (dik if dik < dij else dij))
                                    + (djk if djk < dij else dij))
                                   + (djk if djk < dik else dik))
                            if val > best:
                                best = val
                                bi = i
                                bj = j
                                bk = k
            else:
                for i in range(count):
                    for j in range(i + 1, count):
                        dij = dist[i * count + j]
                        for k in range(j + 1, count):
                            dik = dist[i * count + k]
                            djk = dist[j * count + k]
                            for l in range(k + 1, count):
                                dil = dist[i * count + l]
                                djl = dist[j * count + l]
                                dkl = dist[k * count + l]
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
                                    bi = i
                                    bj = j
                                    bk = k
                                    bl = l
    finally:
        free(lx)
        free(ly)
        free(dist)
    if n == 2:
        return best, (bi, bj)
    if n == 3:
        return best, (bi, bj, bk)
    return best, (bi, bj, bk, bl)
