"""Rep C_p and Ver_p: Jordan types, Green ring, fusion, homs, sym powers."""

import numpy as np
import pytest

from verlinde import verp
from verlinde.guard import SizeGuardError
from verlinde.verp import (CpModule, VerObject, canonical_module,
                           coequalizer_ver, divided_power_ver, fuse,
                           fuse_simples, green_tensor, hom_basis_ver,
                           jordan_type, module_from_sizes, semisimplify,
                           sym_power_ver)

from naive_oracles import naive_sym_power_mults


def L(p, k):
    mults = [0] * (p - 1)
    mults[k - 1] = 1
    return VerObject(p, tuple(mults))


# -- Jordan types -----------------------------------------------------------


def test_jordan_single_block():
    assert jordan_type(module_from_sizes(5, [3])).counts == (0, 0, 1, 0, 0)


def test_jordan_zero_action():
    assert jordan_type(CpModule(5, np.zeros((4, 4)))).counts == (4, 0, 0, 0, 0)


def test_jordan_regular_representation():
    m = module_from_sizes(5, [5])
    typ = jordan_type(m)
    assert typ.counts == (0, 0, 0, 0, 1)
    # rank sequence of the companion nilpotent: rank(x^k) = p - k
    from verlinde import fpla
    for k in range(6):
        assert fpla.rank(fpla.mat_pow(m.x, k, 5), 5) == max(5 - k, 0)


def test_non_nilpotent_rejected():
    with pytest.raises(ValueError):
        CpModule(3, np.eye(2, dtype=np.int64))


# -- Green ring --------------------------------------------------------------


def test_green_unit():
    for m in (1, 2, 4):
        typ = green_tensor(module_from_sizes(5, [1]), module_from_sizes(5, [m]))
        want = [0] * 5
        want[m - 1] = 1
        assert list(typ.counts) == want


def test_green_j2_j2_odd_p():
    for p in (3, 5, 7):
        typ = green_tensor(module_from_sizes(p, [2]), module_from_sizes(p, [2]))
        assert typ.counts[0] == 1 and typ.counts[2] == 1 and typ.dim == 4


def test_green_j2_j2_char_two():
    typ = green_tensor(module_from_sizes(2, [2]), module_from_sizes(2, [2]))
    assert typ.counts == (0, 2)
    assert semisimplify(typ).is_zero()


def test_semisimplify_discards_size_p():
    assert semisimplify(jordan_type(module_from_sizes(5, [5]))).is_zero()
    t = jordan_type(module_from_sizes(5, [1, 3]))
    assert semisimplify(t).mults == (1, 0, 1, 0)


# -- fusion -------------------------------------------------------------------


def test_fusion_examples():
    assert fuse(L(5, 2), L(5, 2)).mults == (1, 0, 1, 0)
    for p in (3, 5, 7):
        for j in range(1, p):
            assert fuse(L(p, 1), L(p, j)).mults == L(p, j).mults
        assert fuse(L(p, p - 1), L(p, p - 1)).mults == L(p, 1).mults


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fusion_matches_green_oracle(p):
    for i in range(1, p):
        for j in range(1, p):
            green = semisimplify(green_tensor(module_from_sizes(p, [i]),
                                              module_from_sizes(p, [j])))
            assert green.mults == fuse_simples(p, i, j)


@pytest.mark.parametrize("p", [3, 5])
def test_green_dimension_bookkeeping(p):
    for i in range(1, p):
        for j in range(1, p):
            typ = green_tensor(module_from_sizes(p, [i]), module_from_sizes(p, [j]))
            assert typ.dim == i * j
            small = sorted(s for s in typ.sizes() if s < p)
            want = sorted(abs(i - j) + 2 * k - 1
                          for k in range(1, min(i, j, p - i, p - j) + 1))
            assert small == want


def test_fusion_commutative_associative_random():
    rng = np.random.default_rng(0)
    p = 5
    for _ in range(30):
        a, b, c = (VerObject(p, tuple(int(v) for v in rng.integers(0, 3, 4)))
                   for _ in range(3))
        assert fuse(a, b).mults == fuse(b, a).mults
        assert fuse(fuse(a, b), c).mults == fuse(a, fuse(b, c)).mults


# -- hom spaces modulo negligibles ---------------------------------------------


def test_hom_regular_block_is_negligible():
    m = module_from_sizes(3, [3])
    assert hom_basis_ver(m, m) == []
    ident = verp.VerMorphism(m, m, np.eye(3, dtype=np.int64))
    assert ident.is_negligible()


def test_hom_distinct_simples_empty():
    assert hom_basis_ver(module_from_sizes(5, [2]), module_from_sizes(5, [3])) == []


def test_endomorphisms_of_semisimple_object():
    m = canonical_module(VerObject(5, (2, 1, 0, 0)))
    assert len(hom_basis_ver(m, m)) == 5
    assert len(verp.rep_hom_basis(m, m)) == 10


def test_negligibility_is_an_ideal():
    p = 3
    m = module_from_sizes(p, [3])     # regular block: its identity is negligible
    n = module_from_sizes(p, [1, 2])
    neg = verp.VerMorphism(m, m, np.eye(3, dtype=np.int64))
    assert neg.is_negligible()
    for g in verp.rep_hom_basis(m, n):
        assert verp.VerMorphism(m, n, (g @ neg.mat) % p).is_negligible()
    for h in verp.rep_hom_basis(n, m):
        assert verp.VerMorphism(n, m, (neg.mat @ h) % p).is_negligible()


# -- symmetric and divided powers -------------------------------------------------


def test_sym_power_of_unit():
    for n in (0, 1, 2, 5):
        assert sym_power_ver(L(5, 1), n).mults == (1, 0, 0, 0)


def test_sym_power_degree_zero_and_one():
    x = VerObject(5, (1, 1, 0, 0))
    assert sym_power_ver(x, 0).mults == (1, 0, 0, 0)
    assert sym_power_ver(x, 1).mults == x.mults


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sym_square_of_top_simple_vanishes(p):
    assert sym_power_ver(L(p, p - 1), 2).is_zero()


def test_sym_power_vanishing_family():
    for p in (3, 5, 7):
        for k in range(1, p - 1):
            assert sym_power_ver(L(p, p - k), k + 1).is_zero()


def test_sym_square_L2_p5_matches_naive_oracle():
    x = canonical_module(L(5, 2)).x
    assert sym_power_ver(L(5, 2), 2).mults == naive_sym_power_mults(x, 5, 2)


def test_sym_cube_L2_p5_matches_naive_oracle():
    x = canonical_module(L(5, 2)).x
    assert sym_power_ver(L(5, 2), 3).mults == naive_sym_power_mults(x, 5, 3)


def test_sym_square_top_simple_p7_matches_naive_oracle():
    x = canonical_module(L(7, 6)).x       # 36-dimensional tensor square
    assert sym_power_ver(L(7, 6), 2).mults == naive_sym_power_mults(x, 7, 2)


def test_sym_square_mixed_object_matches_naive_oracle():
    obj = VerObject(3, (1, 1))
    x = canonical_module(obj).x
    assert sym_power_ver(obj, 2).mults == naive_sym_power_mults(x, 3, 2)


def test_divided_power_basics():
    x = VerObject(5, (0, 1, 0, 0))
    g0, _ = divided_power_ver(x, 0)
    assert g0.mults == (1, 0, 0, 0)
    g1, incl = divided_power_ver(x, 1)
    assert g1.mults == x.mults
    assert np.array_equal(incl.mat, np.eye(2, dtype=np.int64))


def test_divided_square_matches_naive_invariants():
    obj = L(5, 2)
    g2, incl = divided_power_ver(obj, 2)
    # the inclusion is a genuine module map into the tensor square
    big = verp.tensor_power_module(obj, 2)
    assert incl.cod.dim == big.dim
    assert ((incl.mat @ canonical_module(g2).x) % 5
            == (big.x @ incl.mat) % 5).all()
    # invariants pair with coinvariants in a semisimple category
    assert g2.mults == sym_power_ver(obj, 2).mults


def test_size_guard_refuses_huge_powers():
    with pytest.raises(SizeGuardError):
        sym_power_ver(L(5, 4), 8)     # 4^8 = 65536 > 10^4


def test_size_guard_env_override(monkeypatch):
    monkeypatch.setenv("VERLINDE_SIZE_GUARD", "10")
    with pytest.raises(SizeGuardError):
        sym_power_ver(L(5, 2), 4)     # 2^4 = 16 > 10


# -- coequalizers -----------------------------------------------------------------


def test_coequalizer_of_equal_maps_is_codomain():
    m = canonical_module(VerObject(5, (1, 1, 0, 0)))
    ident = verp.VerMorphism(m, m, np.eye(m.dim, dtype=np.int64))
    obj, proj = coequalizer_ver([ident, ident])
    assert obj.mults == (1, 1, 0, 0)


def test_coequalizer_of_id_and_zero_is_zero():
    m = canonical_module(L(5, 2))
    ident = verp.VerMorphism(m, m, np.eye(2, dtype=np.int64))
    zero = verp.VerMorphism(m, m, np.zeros((2, 2)))
    obj, _ = coequalizer_ver([ident, zero])
    assert obj.is_zero()


def test_coequalizer_of_swap_equals_sym_square():
    obj = L(5, 2)
    big = verp.tensor_power_module(obj, 2)
    swap = verp.VerMorphism(big, big, verp.adjacent_swap_matrix([2, 2], 0))
    ident = verp.VerMorphism(big, big, np.eye(4, dtype=np.int64))
    out, proj = coequalizer_ver([swap, ident])
    assert out.mults == sym_power_ver(obj, 2).mults
    # the projection must kill the swap differences
    diff = (proj.mat @ ((swap.mat - ident.mat) % 5)) % 5
    assert verp.VerMorphism(big, proj.cod, (proj.mat @ swap.mat) % 5).equals(proj)
