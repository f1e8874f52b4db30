"""The non-semisimple category of k[x]/x^2-modules in characteristic 2,
equipped with the twisted braiding v ⊗ w ↦ w ⊗ v + xw ⊗ xv.

Thin, named wrappers around the ver4plus backend: the braiding matrix,
braided symmetric powers with their stored projections, induced maps on
symmetric powers, and the (trivial, projective) iso-class invariant.
"""

from __future__ import annotations

from . import fpla
from .backends import Mor, V4Backend, V4Obj

_BACKEND = V4Backend()


def unit() -> V4Obj:
    return _BACKEND.unit()


def indecomposable_p() -> V4Obj:
    """P = k<u, v> with x·v = u, on the ordered basis (u, v)."""
    return V4Obj(2, [[0, 1], [0, 0]])


def braiding_v4(m: V4Obj, n: V4Obj) -> Mor:
    return _BACKEND.braiding(m, n)


def iso_class_v4(m: V4Obj) -> tuple[int, int]:
    """(copies of 1, copies of P) = (dim - 2·rank(x), rank(x))."""
    return _BACKEND.iso_class(m)


def sym_power_v4(m: V4Obj, n: int) -> tuple[V4Obj, Mor]:
    """S^n(m) as a cokernel of the braided transposition differences,
    with the projection from the n-th tensor power."""
    return _BACKEND.sym_power(m, n)


def sym_power_of_morphism_v4(f: Mor, k: int) -> Mor:
    """The induced map S^k(dom f) -> S^k(cod f) between the chosen
    cokernel presentations."""
    be = _BACKEND
    be.assert_valid_mor(f)
    sdom, pdom = be.sym_power(f.dom, k)
    scod, pcod = be.sym_power(f.cod, k)
    if k == 0:
        return be.id_mor(be.unit())
    power = f
    for _ in range(k - 1):
        power = be.tensor_mor(power, f)
    sec = be.section_of_epi(pdom)
    out = be.compose(pcod, be.compose(power, sec))
    lhs = be.compose(out, pdom)
    rhs = be.compose(pcod, power)
    if not be.eq_mor(lhs, rhs):
        raise AssertionError("induced symmetric-power map is ill-defined")
    return out


def split_epi_section(f: Mor):
    """A module-map section of f found by linear solving, or None.

    Any linear section is sec0 + K·T with K spanning ker(f); commuting with
    the generator action is a linear condition on T, solved exactly.
    """
    import numpy as np

    m = f.mat.shape[0]
    sec0 = fpla.solve(f.mat, fpla.identity(m), 2)
    if sec0 is None:
        return None
    xd, xc = f.dom.x, f.cod.x
    defect = (fpla.matmul(xd, sec0, 2) - fpla.matmul(sec0, xc, 2)) % 2
    kern = fpla.kernel_basis(f.mat, 2)
    if defect.any():
        if kern.shape[1] == 0:
            return None
        # row-major vec: vec(A T) = (A ⊗ I) vec T, vec(T B) = (I ⊗ B^T) vec T
        a = (fpla.kron(fpla.matmul(xd, kern, 2), fpla.identity(m), 2)
             - fpla.kron(kern, xc.T.copy(), 2)) % 2
        t = fpla.solve(a, (-defect).reshape(-1, 1) % 2, 2)
        if t is None:
            return None
        sec0 = (sec0 + kern @ t.reshape(kern.shape[1], m)) % 2
    good = (np.array_equal(fpla.matmul(f.mat, sec0, 2), fpla.identity(m))
            and not ((fpla.matmul(xd, sec0, 2) - fpla.matmul(sec0, xc, 2)) % 2).any())
    return sec0 if good else None
