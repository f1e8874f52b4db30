"""Benchmark the numba-compiled kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_kernels.py [--sizes 200,400,800] [--p 5]

Times rref_mod (the hot kernel behind every rank/kernel/solve) and
matmul_mod on random matrices over F_p, one warm-up call per backend so
numba JIT compilation is excluded from the timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from verlinde import kernels


def bench_one(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="200,400,800")
    parser.add_argument("--p", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = kernels.available_backends()
    rng = np.random.default_rng(0)

    print(f"kernels available: {', '.join(backends)}   (p = {args.p})")
    header = f"{'kernel':<12} {'n':>6} " + " ".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for n in sizes:
        a = rng.integers(0, args.p, size=(n, n)).astype(np.int64)
        b = rng.integers(0, args.p, size=(n, n)).astype(np.int64)
        for label, call in (("rref_mod", lambda impl: impl.rref_mod(a, args.p)),
                            ("matmul_mod", lambda impl: impl.matmul_mod(a, b, args.p))):
            times = []
            for name in backends:
                kernels.set_backend(name)
                call(kernels)  # warm-up (JIT compile on first numba call)
                times.append(bench_one(call, kernels, repeats=args.repeats))
            row = f"{label:<12} {n:>6} " + " ".join(f"{t * 1e3:>10.1f}ms" for t in times)
            print(row)

    # agreement spot check between the paths
    kernels.set_backend(backends[0])
    r0, p0 = kernels.rref_mod(a, args.p)
    for name in backends[1:]:
        kernels.set_backend(name)
        r1, p1 = kernels.rref_mod(a, args.p)
        assert np.array_equal(r0, r1) and np.array_equal(p0, p1), name
    print("all kernel backends agree on the RREF spot check")


if __name__ == "__main__":
    main()
