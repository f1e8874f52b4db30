"""Exact linear algebra over F_p: spec examples, invariants, kernel parity."""

import numpy as np
import pytest

from verlinde import fpla, kernels

from naive_oracles import naive_rank

PRIMES = [2, 3, 5, 7]


def test_rank_identity():
    assert fpla.rank(fpla.identity(3), 5) == 3


def test_rank_zero_matrix():
    assert fpla.rank(fpla.zeros(2, 2), 2) == 0


def test_rank_one_dependent_rows_mod_5():
    m = fpla.normalize([[1, 2], [2, 4]], 5)
    assert fpla.rank(m, 5) == 1


def test_kernel_of_identity_is_empty():
    assert fpla.kernel_basis(fpla.identity(4), 3).shape == (4, 0)


def test_kernel_of_zero_2x3():
    k = fpla.kernel_basis(fpla.zeros(2, 3), 5)
    assert k.shape == (3, 3)
    assert fpla.rank(k, 5) == 3


def test_kernel_mod_2_single_row():
    k = fpla.kernel_basis(fpla.normalize([[1, 1]], 2), 2)
    assert k.shape == (2, 1)
    assert k[:, 0].tolist() == [1, 1]
    # oracle: only (1,1) among all four vectors is killed
    killed = [v for v in [(0, 0), (0, 1), (1, 0), (1, 1)] if (v[0] + v[1]) % 2 == 0]
    assert killed == [(0, 0), (1, 1)]


def test_rank_factorization_identity():
    c, f = fpla.rank_factorization(fpla.identity(3), 5)
    assert np.array_equal(fpla.matmul(c, f, 5), fpla.identity(3))


def test_rank_factorization_zero():
    c, f = fpla.rank_factorization(fpla.zeros(3, 2), 5)
    assert c.shape == (3, 0) and f.shape == (0, 2)


def test_rank_factorization_rank_one():
    m = fpla.normalize([[1, 2], [2, 4]], 5)
    c, f = fpla.rank_factorization(m, 5)
    assert c.shape == (2, 1) and f.shape == (1, 2)
    assert np.array_equal(fpla.matmul(c, f, 5), m)


@pytest.mark.parametrize("p", PRIMES)
def test_rank_properties_random(p):
    rng = np.random.default_rng(p)
    for _ in range(25):
        m = rng.integers(0, p, size=(rng.integers(0, 7), rng.integers(0, 7)))
        m = m.astype(np.int64)
        r = fpla.rank(m, p)
        assert r == fpla.rank(m.T.copy(), p)
        assert r == naive_rank(m.tolist(), p)
        assert m.shape[1] == r + fpla.kernel_basis(m, p).shape[1]
        c, f = fpla.rank_factorization(m, p)
        assert np.array_equal(fpla.matmul(c, f, p), m)
        assert fpla.rank(c, p) == c.shape[1]
        assert fpla.rank(f, p) == f.shape[0]


def test_solve_and_inverse_random():
    rng = np.random.default_rng(11)
    for p in (3, 7):
        for _ in range(10):
            n = int(rng.integers(1, 6))
            m = rng.integers(0, p, size=(n, n)).astype(np.int64)
            if fpla.rank(m, p) < n:
                continue
            inv = fpla.inverse(m, p)
            assert np.array_equal(fpla.matmul(m, inv, p), fpla.identity(n))
            b = rng.integers(0, p, size=(n, 2)).astype(np.int64)
            x = fpla.solve(m, b, p)
            assert np.array_equal(fpla.matmul(m, x, p), b)


def test_solve_detects_inconsistency():
    a = fpla.normalize([[1, 0], [1, 0]], 3)
    b = fpla.normalize([[1], [2]], 3)
    assert fpla.solve(a, b, 3) is None


def test_quotient_maps_contract():
    rng = np.random.default_rng(5)
    for _ in range(10):
        sub = rng.integers(0, 5, size=(6, 2)).astype(np.int64)
        q, sec = fpla.quotient_maps(sub, 5)
        assert not fpla.matmul(q, sub, 5).any()
        assert np.array_equal(fpla.matmul(q, sec, 5), fpla.identity(q.shape[0]))


def test_incremental_span_matches_rank():
    rng = np.random.default_rng(7)
    for p in (2, 5):
        cols = rng.integers(0, p, size=(8, 12)).astype(np.int64)
        span = fpla.IncrementalSpan(8, p)
        span.add_columns(cols)
        assert span.dim == fpla.rank(cols, p)
        for j in range(cols.shape[1]):
            assert span.contains(cols[:, j])


@pytest.mark.parametrize("backend_name", kernels.available_backends())
def test_kernel_backends_agree(backend_name):
    rng = np.random.default_rng(3)
    previous = kernels.active_backend()
    try:
        a = rng.integers(0, 7, size=(20, 25)).astype(np.int64)
        kernels.set_backend("numpy")
        r_np, piv_np = kernels.rref_mod(a, 7)
        m_np = kernels.matmul_mod(a, a.T.copy(), 7)
        kernels.set_backend(backend_name)
        r, piv = kernels.rref_mod(a, 7)
        m = kernels.matmul_mod(a, a.T.copy(), 7)
        assert np.array_equal(r, r_np) and np.array_equal(piv, piv_np)
        assert np.array_equal(m, m_np)
    finally:
        kernels.set_backend(previous)


def test_fpmatrix_json_round_trip():
    m = fpla.FpMatrix(5, [[1, 2], [3, 4]])
    doc = m.to_json()
    assert doc == {"rows": 2, "cols": 2, "p": 5, "entries": [1, 2, 3, 4]}
    assert fpla.FpMatrix.from_json(doc) == m


def test_fpmatrix_json_rejects_bad_fields():
    with pytest.raises(ValueError, match="entries"):
        fpla.FpMatrix.from_json({"rows": 1, "cols": 2, "p": 5, "entries": [1]})
    with pytest.raises(ValueError, match="p"):
        fpla.FpMatrix.from_json({"rows": 1, "cols": 1, "entries": [0]})
    with pytest.raises(ValueError):
        fpla.FpMatrix(4, [[1]])
