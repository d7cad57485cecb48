"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best of ``--repeat`` runs per backend and checks that
both backends return the same floats.
"""

import argparse
import time

from nn_extremal import kernels
from nn_extremal._rng import SplitMix64


def points(n, seed=1):
    rng = SplitMix64(seed)
    xs = [rng.random() for _ in range(n)]
    ys = [rng.random() for _ in range(n)]
    return xs, ys


def best_time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    def sigma(n, loops):
        xs, ys = points(n)

        def run(k):
            bx, by = kernels.as_buffer(xs), kernels.as_buffer(ys)
            v = 0.0
            for _ in range(loops):
                v = k.sigma_xy(bx, by)
            return v
        return f"sigma_xy n={n} x{loops}", run

    def pattern(n):
        xs, ys = points(n, seed=7)

        def run(k):
            bx, by = kernels.as_buffer(xs), kernels.as_buffer(ys)
            return k.pattern_search(bx, by, 1.0, 1.0, 0.25, 0.5, 1e-9, 100_000, 1e-12, 1e-24)[0]
        return f"pattern_search n={n}", run

    def grid(n, m):
        return f"grid_max n={n} m={m}", lambda k: k.grid_max(n, m, 1.0, 1.0)[0]

    return [sigma(8, 2000), sigma(64, 100), pattern(4), pattern(12), grid(3, 8), grid(4, 4)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        compiled = kernels.get_backend("compiled")
    except ImportError:
        compiled = None
        print("compiled extension not built; timing the python backend only")
    python = kernels.get_backend("python")
    print(f"{'kernel':28s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}  same")
    for name, run in cases():
        tp, vp = best_time(lambda: run(python), args.repeat)
        if compiled is None:
            print(f"{name:28s} {tp:10.4f}")
            continue
        tc, vc = best_time(lambda: run(compiled), args.repeat)
        print(f"{name:28s} {tp:10.4f} {tc:11.5f} {tp / tc:8.1f}x  {vp == vc}")


if __name__ == "__main__":
    main()
