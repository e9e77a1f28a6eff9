"""numba kernels for the exhaustive oracle sweep."""

import numpy as np
from numba import njit


@njit(cache=True)
def dp_sweep(n, adj):
    dp = np.zeros(1 << n, dtype=np.uint8)
    for m in range(1, 1 << n):
        i = 0
        while not (m >> i) & 1:
            i += 1
        rest = m & (m - 1)
        a = dp[rest]
        b = 1 + dp[rest & adj[i]]
        dp[m] = a if a >= b else b
    return dp
