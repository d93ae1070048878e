"""Compiled kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs once untimed (JIT warm-up), then the best of N runs is kept.
"""
import argparse
import time

import numpy as np

from sgf import kernels

CASES = {
    "apery <1009, 1013, 2027, 3001>": ("apery", (np.array([1009, 1013, 2027, 3001], dtype=np.int64),)),
    "apery <97, 131, 173, 211, 257>": ("apery", (np.array([97, 131, 173, 211, 257], dtype=np.int64),)),
    "sieve <101, 103, 107> to 10^5": ("sieve", (np.array([101, 103, 107], dtype=np.int64), 100_000)),
    "wilf scan gens <= 30, n <= 3": ("wilf_scan", (30, 3, 16)),
    "johnson sweep gens <= 40": ("johnson_sweep", (40, 16)),
}


def best_of(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    fast, slow = kernels.load("numba"), kernels.load("numpy")
    print(f"{'case':36s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for label, (name, call_args) in CASES.items():
        t_fast = best_of(getattr(fast, name), call_args, args.repeat)
        t_slow = best_of(getattr(slow, name), call_args, args.repeat)
        print(f"{label:36s} {t_fast * 1e3:10.2f} {t_slow * 1e3:10.2f} {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
