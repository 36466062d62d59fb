"""Time the F_p kernels under the numba and pure-numpy backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--p 13]

Results are checked for equality between backends before timings print.
"""
import argparse
import time

import numpy as np

from centralizers import _accel


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(p, rng):
    for n in (16, 64, 144):
        a = rng.integers(0, p, size=(n, n))
        yield f"rref_mod {n}x{n}", lambda a=a: _accel.rref_mod(a, p)
    for n in (64, 256):
        a = rng.integers(0, p, size=(n, n))
        yield f"matmul_mod {n}x{n}", lambda a=a: _accel.matmul_mod(a, a, p)
    for k in (6, 8):
        stack = rng.integers(0, p, size=(k, 4, 4))
        yield f"stdpoly_mod S_{k} on 4x4", lambda s=stack: _accel.stdpoly_mod(s, p)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--p", type=int, default=13)
    args = ap.parse_args()
    if _accel.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    prev = _accel.BACKEND
    print(f"{'kernel':28s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    try:
        for label, fn in cases(args.p, np.random.default_rng(0)):
            res, times = {}, {}
            for name in ("numba", "numpy"):
                _accel.use_backend(name)
                res[name] = fn()  # also triggers compilation
                times[name] = _time(fn, args.repeat)
            a, b = res["numba"], res["numpy"]
            same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) \
                else np.array_equal(a, b)
            if not same:
                raise SystemExit(f"{label}: backends disagree")
            print(f"{label:28s} {times['numba'] * 1e3:9.2f}ms {times['numpy'] * 1e3:9.2f}ms "
                  f"{times['numpy'] / times['numba']:7.1f}x")
    finally:
        _accel.use_backend(prev)


if __name__ == "__main__":
    main()
