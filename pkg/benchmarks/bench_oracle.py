#!/usr/bin/env python3
"""Benchmark the exhaustive-oracle sweep: numba kernel vs numpy fallback.

Run:  python3 benchmarks/bench_oracle.py [--n-max 22] [--repeats 3]

The numba timing excludes the one-off JIT compile (a warmup call at n=4
triggers it).  Both backends must produce identical tables; the benchmark
asserts that while it measures.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from coprimax.bruteforce import _dp_numpy, coprime_adjacency


def _numba_sweep():
    try:
        from coprimax._kernels_numba import dp_sweep
    except ImportError:
        return None
    return dp_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=22)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    dp_numba = _numba_sweep()
    if dp_numba is not None:
        dp_numba(4, coprime_adjacency(4))  # JIT warmup

    print(f"{'n':>4} {'masks':>12} {'numpy (s)':>12} {'numba (s)':>12} {'speedup':>9}")
    for n in range(12, args.n_max + 1, 2):
        adj = coprime_adjacency(n)

        best_np = min(_timed(_dp_numpy, n, adj, repeats=args.repeats)
                      for _ in range(1))
        row = f"{n:>4} {1 << n:>12} {best_np:>12.4f}"

        if dp_numba is not None:
            best_nb, tbl_nb = None, None
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                tbl_nb = dp_numba(n, adj)
                dt = time.perf_counter() - t0
                best_nb = dt if best_nb is None else min(best_nb, dt)
            assert np.array_equal(tbl_nb, _dp_numpy(n, adj)), "backend mismatch"
            row += f" {best_nb:>12.4f} {best_np / best_nb:>8.1f}x"
        else:
            row += f" {'n/a':>12} {'':>9}"
        print(row)


def _timed(fn, n, adj, repeats: int) -> float:
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(n, adj)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


if __name__ == "__main__":
    main()
