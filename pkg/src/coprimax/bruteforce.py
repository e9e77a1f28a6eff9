"""Exhaustive-subset oracle used to cross-check the branch-and-bound solver.

For every bitmask m over [1, n] the table dp[m] holds the size of the largest
pairwise-coprime subset of m, via the recurrence on the lowest set bit i:

    dp[m] = max(dp[m without i], 1 + dp[m & coprime_neighbours(i)])

Both referenced masks are numerically smaller, so a single ascending sweep
fills the table.  f(n, k) is then the largest popcount among masks whose dp
value stays <= k.  The sweep over 2**n masks is the hot kernel: it runs
through numba's @njit when available and falls back to a vectorized numpy
formulation (grouping masks by lowest set bit) otherwise.

Set COPRIMAX_BACKEND=numpy or =numba to force a backend; the default (auto)
prefers numba.  `benchmarks/bench_oracle.py` compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np

MAX_ORACLE_N = 26  # 2**26 table entries; beyond this the table alone is > 64 MiB

_POPCOUNT8 = np.array([bin(v).count("1") for v in range(256)], dtype=np.uint8)


def _resolve_backend() -> str:
    choice = os.environ.get("COPRIMAX_BACKEND", "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"COPRIMAX_BACKEND must be auto, numba or numpy, got {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        from . import _kernels_numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"
    return "numba"


BACKEND = _resolve_backend()


def coprime_adjacency(n: int) -> np.ndarray:
    """adj[i] = bitmask of the j != i with gcd(i+1, j+1) = 1."""
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n):
        mask = 0
        for j in range(n):
            if i != j and math.gcd(i + 1, j + 1) == 1:
                mask |= 1 << j
        adj[i] = mask
    return adj


def _dp_numpy(n: int, adj: np.ndarray) -> np.ndarray:
    dp = np.zeros(1 << n, dtype=np.uint8)
    # masks with lowest set bit i reference only masks with a higher lowest
    # bit, so sweeping i downward keeps every gather inside computed territory
    for i in range(n - 1, -1, -1):
        rest = np.arange(1 << (n - 1 - i), dtype=np.int64) << (i + 1)
        masks = rest | (1 << i)
        dp[masks] = np.maximum(dp[rest], 1 + dp[rest & adj[i]])
    return dp


def max_clique_table(n: int) -> np.ndarray:
    """dp table of largest-coprime-subset sizes for all subsets of [1, n]."""
    if not 1 <= n <= MAX_ORACLE_N:
        raise ValueError(f"oracle supports 1 <= n <= {MAX_ORACLE_N}, got {n}")
    adj = coprime_adjacency(n)
    if BACKEND == "numba":
        from ._kernels_numba import dp_sweep
        return dp_sweep(n, adj)
    return _dp_numpy(n, adj)


def popcounts(masks: np.ndarray) -> np.ndarray:
    view = masks.astype(np.int64).view(np.uint8).reshape(len(masks), 8)
    return _POPCOUNT8[view].sum(axis=1, dtype=np.uint8)


def bruteforce_f(n: int, k: int, table: np.ndarray | None = None) -> int:
    """f(n, k) by exhaustive enumeration of all subsets of [1, n]."""
    dp = max_clique_table(n) if table is None else table
    masks = np.arange(1 << n, dtype=np.int64)
    pc = popcounts(masks)
    return int(pc[dp <= k].max())


def bruteforce_max_sets(n: int, k: int,
                        table: np.ndarray | None = None) -> tuple[int, list[list[int]]]:
    """All maximum admissible subsets of [1, n], ascending-lex order."""
    dp = max_clique_table(n) if table is None else table
    masks = np.arange(1 << n, dtype=np.int64)
    pc = popcounts(masks)
    admissible = dp <= k
    best = int(pc[admissible].max())
    hits = np.flatnonzero(admissible & (pc == best))
    sets = sorted(
        [i + 1 for i in range(n) if (m >> i) & 1] for m in hits.tolist()
    )
    return best, sets
