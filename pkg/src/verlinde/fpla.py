"""Exact dense linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries in [0, p); the prime travels
alongside as an argument.  Everything is deterministic: elimination always
pivots on the first nonzero entry in column order, solutions set free
variables to zero, and no floating point appears anywhere.

All functions are pure; inputs are never mutated, so values can be shared
freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import matmul_mod, rref_mod

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def normalize(a, p: int) -> np.ndarray:
    """Coerce to an int64 matrix with entries reduced mod p."""
    m = np.asarray(a, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError(f"expected a 2d array, got ndim={m.ndim}")
    return m


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    return matmul_mod(a, b, p)


def add(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a + b) % p


def sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a - b) % p


def scale(c: int, a: np.ndarray, p: int) -> np.ndarray:
    return (c * a) % p


def kron(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return np.kron(a, b) % p


def mat_pow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = identity(a.shape[0])
    for _ in range(k):
        out = matmul(out, a, p)
    return out


def rank(a: np.ndarray, p: int) -> int:
    _, pivots = rref_mod(a, p)
    return len(pivots)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    return rref_mod(a, p)


def kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space of a, as columns of an n x k matrix."""
    m, n = a.shape
    r, pivots = rref_mod(a, p)
    k = len(pivots)
    mask = np.ones(n, dtype=bool)
    mask[pivots] = False
    free = np.nonzero(mask)[0]
    out = zeros(n, len(free))
    out[free, np.arange(len(free))] = 1
    if k and len(free):
        out[pivots, :] = (-r[:k, free]) % p
    return out


def column_space_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Pivot columns of a: a deterministic basis of the column space."""
    _, pivots = rref_mod(a, p)
    return a[:, [int(c) for c in pivots]].copy()


def rank_factorization(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Write a = c @ f with c of full column rank and f of full row rank.

    c holds the pivot columns of a; f is the nonzero part of the reduced
    row-echelon form, so the factorization is exact and deterministic.
    """
    r, pivots = rref_mod(a, p)
    k = len(pivots)
    c = a[:, [int(x) for x in pivots]].copy()
    f = r[:k, :].copy()
    return c, f


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One exact solution x of a @ x = b, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    m, n = a.shape
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    k = b.shape[1]
    aug = np.hstack([a, b])
    r, pivots = rref_mod(aug, p)
    for c in pivots:
        if int(c) >= n:
            return None
    x = zeros(n, k)
    for prow, pcol in enumerate(pivots):
        x[int(pcol), :] = r[prow, n:]
    return x


def solve_left(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One exact solution x of x @ a = b, or None."""
    xt = solve(a.T.copy(), b.T.copy(), p)
    return None if xt is None else xt.T.copy()


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, identity(n), p)
    if x is None or rank(a, p) != n:
        raise ValueError("matrix is singular mod p")
    return x


def in_column_span(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    """Is every column of v inside the column span of basis?"""
    if v.shape[1] == 0:
        return True
    return rank(np.hstack([basis, v]), p) == rank(basis, p)


def spans_equal(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra = rank(a, p)
    rb = rank(b, p)
    return ra == rb and rank(np.hstack([a, b]), p) == ra


class IncrementalSpan:
    """Incrementally built column span in reduced echelon form.

    Columns are kept so that the pivot rows carve out an identity submatrix,
    making reduction of a new vector a single matrix-vector product.
    """

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.basis = zeros(n, 0)
        self.pivot_rows: list[int] = []
        self._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = v % self.p
        if self.dim == 0:
            return v.copy()
        coeff = v[self.pivot_rows]
        return (v - self.basis @ coeff) % self.p

    def contains(self, v: np.ndarray) -> bool:
        return not self.reduce(v).any()

    def add(self, v: np.ndarray) -> bool:
        """Add v to the span; returns True if it enlarged the span."""
        r = self.reduce(v)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        r = (r * self._inv[int(r[piv])]) % self.p
        if self.dim:
            self.basis = (self.basis - np.outer(self.basis[piv, :], r).T) % self.p
        self.basis = np.hstack([self.basis, r.reshape(-1, 1)])
        self.pivot_rows.append(piv)
        return True

    def add_columns(self, m: np.ndarray) -> None:
        for j in range(m.shape[1]):
            self.add(m[:, j])


def extend_basis(inside: np.ndarray, candidates: np.ndarray, p: int) -> np.ndarray:
    """Columns of candidates extending span(inside), greedily in order."""
    span = IncrementalSpan(inside.shape[0], p)
    span.add_columns(inside)
    chosen = []
    for j in range(candidates.shape[1]):
        if span.add(candidates[:, j]):
            chosen.append(j)
    return candidates[:, chosen].copy()


def complement_basis(sub: np.ndarray, p: int) -> np.ndarray:
    """Standard-basis vectors completing the column span of sub to F_p^n."""
    n = sub.shape[0]
    return extend_basis(sub, identity(n), p)


def quotient_maps(sub: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Projection q and section s for F_p^n -> F_p^n / span(sub).

    q has shape (n - r, n) with q @ sub == 0; s has shape (n, n - r) with
    q @ s == identity.  The section realizes the chosen complement.
    """
    n = sub.shape[0]
    sb = column_space_basis(sub, p)
    comp = complement_basis(sb, p)
    full = np.hstack([sb, comp])
    inv = inverse(full, p)
    q = inv[sb.shape[1]:, :].copy()
    return q, comp


def section_of_surjection(a: np.ndarray, p: int) -> np.ndarray:
    """Right inverse of a surjective matrix: a @ s == identity."""
    s = solve(a, identity(a.shape[0]), p)
    if s is None:
        raise ValueError("matrix is not surjective")
    return s


@dataclass
class FpMatrix:
    """JSON-facing wrapper: a dense matrix together with its prime."""

    p: int
    mat: np.ndarray

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        self.mat = normalize(self.mat, self.p)

    def to_json(self) -> dict:
        r, c = self.mat.shape
        return {
            "rows": int(r),
            "cols": int(c),
            "p": int(self.p),
            "entries": [int(v) for v in self.mat.reshape(-1)],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FpMatrix":
        for field in ("rows", "cols", "p", "entries"):
            if field not in doc:
                raise ValueError(f"FpMatrix JSON missing field {field!r}")
        rows, cols, p = int(doc["rows"]), int(doc["cols"]), int(doc["p"])
        entries = doc["entries"]
        if len(entries) != rows * cols:
            raise ValueError("FpMatrix JSON field 'entries' has wrong length")
        mat = np.asarray(entries, dtype=np.int64).reshape(rows, cols)
        if np.any(mat < 0) or np.any(mat >= p):
            raise ValueError("FpMatrix JSON field 'entries' out of range [0, p)")
        return cls(p=p, mat=mat)

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.mat.shape == other.mat.shape
            and np.array_equal(self.mat, other.mat)
        )
