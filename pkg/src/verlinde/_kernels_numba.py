"""Numba-compiled row reduction and matrix product mod p.

Same contracts as _kernels_numpy; selected through verlinde.kernels.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _modinv(a: int, p: int) -> int:
    # Fermat: a^(p-2) mod p by square-and-multiply.
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


@njit(cache=True)
def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    r = a.copy()
    m, n = r.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    npiv = 0
    row = 0
    for col in range(n):
        if row >= m:
            break
        sel = -1
        for i in range(row, m):
            if r[i, col] != 0:
                sel = i
                break
        if sel == -1:
            continue
        if sel != row:
            for j in range(n):
                tmp = r[row, j]
                r[row, j] = r[sel, j]
                r[sel, j] = tmp
        inv = _modinv(r[row, col], p)
        for j in range(n):
            r[row, j] = (r[row, j] * inv) % p
        for i in range(m):
            if i != row and r[i, col] != 0:
                f = r[i, col]
                for j in range(n):
                    r[i, j] = (r[i, j] - f * r[row, j]) % p
        pivots[npiv] = col
        npiv += 1
        row += 1
    return r, pivots[:npiv]


@njit(cache=True)
def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    m, k = a.shape
    k2, n = b.shape
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for t in range(k):
            ait = a[i, t]
            if ait == 0:
                continue
            for j in range(n):
                out[i, j] += ait * b[t, j]
        for j in range(n):
            out[i, j] %= p
    return out
