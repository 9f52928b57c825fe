#!/usr/bin/env python3
"""Compare the compiled exact-arithmetic kernels against the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Builds random small-fraction matrices once, then times mat_mul, mat_kron
and mat_rank on both backends.  Results are exact-identical by the parity
tests; this script only reports wall-clock ratios.
"""

import argparse
import random
import time
from fractions import Fraction

from tqftkit.exactlin import _kernels_py

try:
    from tqftkit.exactlin import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_flat(rng, rows, cols, span=9):
    nums, dens = [], []
    for _ in range(rows * cols):
        f = Fraction(rng.randint(-span, span), rng.randint(1, span))
        nums.append(f.numerator)
        dens.append(f.denominator)
    return nums, dens


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(1)
    n = 48
    a = random_flat(rng, n, n)
    b = random_flat(rng, n, n)
    ka = random_flat(rng, 12, 12)
    kb = random_flat(rng, 10, 10)
    r = random_flat(rng, 40, 40)

    cases = [
        (f"mat_mul  {n}x{n} . {n}x{n}", lambda impl: impl.mat_mul(n, n, n, *a, *b)),
        ("mat_kron 12x12 (x) 10x10", lambda impl: impl.mat_kron(12, 12, 10, 10, *ka, *kb)),
        ("mat_rank 40x40", lambda impl: impl.mat_rank(40, 40, *r)),
    ]

    print(f"{'kernel':<28} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, call in cases:
        t_py = timeit(lambda: call(_kernels_py), args.repeat)
        if _kernels_c is None:
            print(f"{label:<28} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        t_c = timeit(lambda: call(_kernels_c), args.repeat)
        print(
            f"{label:<28} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.1f}x"
        )
    if _kernels_c is None:
        print("\ncompiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
