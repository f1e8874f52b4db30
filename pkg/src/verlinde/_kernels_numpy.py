"""Pure-numpy row reduction and matrix product mod p.

Fallback path when numba is unavailable or disabled via VERLINDE_KERNELS.
All arrays are int64 with entries already reduced into [0, p).
"""

from __future__ import annotations

import numpy as np


def inverse_table(p: int) -> np.ndarray:
    """Table of multiplicative inverses mod p; entry 0 is unused."""
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row-echelon form over F_p.

    Pivots are chosen as the first nonzero entry in column order, so the
    output is deterministic.  Returns (R, pivot_cols).
    """
    r = a.copy()
    m, n = r.shape
    if m == 0 or n == 0:
        return r, np.zeros(0, dtype=np.int64)
    inv = inverse_table(p)
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        r[row] = (r[row] * inv[r[row, col]]) % p
        factors = r[:, col].copy()
        factors[row] = 0
        r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, np.asarray(pivots, dtype=np.int64)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p
