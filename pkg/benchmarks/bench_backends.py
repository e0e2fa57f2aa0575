#!/usr/bin/env python3
"""Side-by-side benchmark of the numpy and numba kernel sets.

Times the hot per-sample kernels and the end-to-end perturbative solve at
several qubit counts, after warming up the JIT (compilation is excluded).

Run: python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from sodelab import _kernels_numba as knb
from sodelab import _kernels_numpy as knp


def random_rho(k, seed):
    rng = np.random.default_rng(seed)
    n = 2**k
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = g @ g.conj().T
    return np.ascontiguousarray(rho / np.trace(rho).real)


def solver(kern, rho, k):
    sigma = kern.depolarizing_generator(rho, k)
    rpt = kern.partial_transpose(rho, 0, k)
    spt = kern.partial_transpose(sigma, 0, k)
    return kern.eta_split(rpt, spt, 1e-9)


KERNELS = [
    ("partial_transpose", lambda kern, rho, k: kern.partial_transpose(rho, 0, k)),
    ("depolarizing_generator", lambda kern, rho, k: kern.depolarizing_generator(rho, k)),
    ("depolarize(t=0.3)", lambda kern, rho, k: kern.depolarize(rho, k, np.exp(-0.3))),
    ("dephase(t=0.3)", lambda kern, rho, k: kern.dephase(rho, k, np.exp(-0.3))),
    ("full solve", solver),
]


def best_of(fn, repeats, loops):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(loops):
            fn()
        best = min(best, (time.perf_counter() - t0) / loops)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--loops", type=int, default=200)
    args = parser.parse_args()

    print("Warming up numba kernels (compilation excluded from timings)...")
    t0 = time.perf_counter()
    for k in (2, 3, 4, 5, 6):
        rho = random_rho(k, k)
        for _, fn in KERNELS:
            fn(knb, rho, k)
    print(f"warmup: {time.perf_counter() - t0:.1f}s\n")

    header = f"{'kernel':>24}  {'k':>2}  {'numpy (us)':>11}  {'numba (us)':>11}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for k in (2, 3, 4, 5, 6):
        rho = random_rho(k, k)
        for name, fn in KERNELS:
            loops = max(10, args.loops // 2**k)
            t_np = best_of(lambda: fn(knp, rho, k), args.repeats, loops)
            t_nb = best_of(lambda: fn(knb, rho, k), args.repeats, loops)
            print(
                f"{name:>24}  {k:>2}  {t_np * 1e6:>11.1f}  {t_nb * 1e6:>11.1f}"
                f"  {t_np / t_nb:>7.1f}x"
            )
        print()

    # agreement spot check on the solver outputs
    rho = random_rho(3, 99)
    a, b = solver(knp, rho, 3), solver(knb, rho, 3)
    worst = max(abs(x - y) for x, y in zip(a[:3], b[:3]))
    print(f"solver agreement (k=3): max|delta| = {worst:.2e}, dims match = {a[3:] == b[3:]}")


if __name__ == "__main__":
    main()
