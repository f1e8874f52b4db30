"""Symmetric-tensor-category backends: vec, verp, ver4plus.

Each backend exposes the same strict-monoidal calculus: objects with an
iso-class descriptor, morphisms as exact F_p matrices, tensor/braiding,
kernels/cokernels/images, direct sums, the nil part, and symmetric/divided
powers of objects.  Associators and unitors are identities by construction,
so no coherence data is carried anywhere.

Morphism matrices mean different things per backend:

* vec       -- a linear map between F_p spaces;
* ver4plus  -- a module map for the generator x (x^2 = 0, char 2);
* verp      -- the induced matrix on multiplicity spaces of the simples,
               block-diagonal by simple type.  Matrix equality in this
               presentation is exactly equality modulo negligibles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fpla, verp
from .guard import check_size
from .verp import VerObject


@dataclass(frozen=True)
class VecObj:
    dim: int


class V4Obj:
    """Module over k[x]/x^2 in characteristic 2."""

    def __init__(self, dim: int, x):
        self.dim = dim
        self.x = fpla.normalize(x, 2)
        if self.x.shape != (dim, dim):
            raise ValueError("generator action has the wrong shape")
        if fpla.matmul(self.x, self.x, 2).any():
            raise ValueError("generator action must square to zero")

    def __eq__(self, other):
        return (isinstance(other, V4Obj) and self.dim == other.dim
                and np.array_equal(self.x, other.x))

    def __repr__(self):
        return f"V4Obj(dim={self.dim})"


@dataclass
class Mor:
    """A morphism: domain, codomain, and its backend matrix."""

    dom: object
    cod: object
    mat: np.ndarray


class Backend:
    """Shared morphism arithmetic; structure ops live in subclasses."""

    name: str
    p: int

    # -- generic morphism algebra ------------------------------------------

    def mor(self, dom, cod, mat) -> Mor:
        m = fpla.normalize(mat, self.p)
        expected = (self.space_dim(cod), self.space_dim(dom))
        if m.shape != expected:
            raise ValueError(f"matrix shape {m.shape} != expected {expected}")
        return Mor(dom, cod, m)

    def id_mor(self, x) -> Mor:
        return Mor(x, x, fpla.identity(self.space_dim(x)))

    def zero_mor(self, x, y) -> Mor:
        return Mor(x, y, fpla.zeros(self.space_dim(y), self.space_dim(x)))

    def compose(self, f: Mor, g: Mor) -> Mor:
        """f ∘ g."""
        if not self.eq_obj(g.cod, f.dom):
            raise ValueError("composition mismatch")
        return Mor(g.dom, f.cod, fpla.matmul(f.mat, g.mat, self.p))

    def add(self, f: Mor, g: Mor) -> Mor:
        return Mor(f.dom, f.cod, (f.mat + g.mat) % self.p)

    def sub(self, f: Mor, g: Mor) -> Mor:
        return Mor(f.dom, f.cod, (f.mat - g.mat) % self.p)

    def eq_mor(self, f: Mor, g: Mor) -> bool:
        return (self.eq_obj(f.dom, g.dom) and self.eq_obj(f.cod, g.cod)
                and np.array_equal(f.mat, g.mat))

    def is_zero_mor(self, f: Mor) -> bool:
        return not f.mat.any()

    def eq_obj(self, x, y) -> bool:
        return x == y

    def is_zero_obj(self, x) -> bool:
        return self.space_dim(x) == 0

    # -- derived helpers ----------------------------------------------------

    def tensor_mor_list(self, mors: list[Mor]) -> Mor:
        out = mors[0]
        for m in mors[1:]:
            out = self.tensor_mor(out, m)
        return out

    def tensor_obj_list(self, objs: list) -> object:
        out = objs[0]
        for o in objs[1:]:
            out = self.tensor_obj(out, o)
        return out

    def factor_through_mono(self, f: Mor, mono: Mor) -> Mor:
        """g with mono ∘ g == f (requires im f ⊆ im mono)."""
        g = fpla.solve(mono.mat, f.mat, self.p)
        if g is None:
            raise ValueError("morphism does not factor through the mono")
        return Mor(f.dom, mono.dom, g)

    def factor_through_epi(self, f: Mor, epi: Mor) -> Mor:
        """g with g ∘ epi == f (requires f to kill ker epi)."""
        g = fpla.solve_left(epi.mat, f.mat, self.p)
        if g is None or not np.array_equal(
                fpla.matmul(g, epi.mat, self.p), f.mat):
            raise ValueError("morphism does not factor through the epi")
        return Mor(epi.cod, f.cod, g)

    def span_contains(self, big: Mor, small: Mor) -> bool:
        """Do the image columns of big contain those of small?"""
        return fpla.in_column_span(small.mat, big.mat, self.p)

    def spans_equal(self, a: Mor, b: Mor) -> bool:
        return fpla.spans_equal(a.mat, b.mat, self.p)

    def image(self, f: Mor):
        """(object, mono) for the image of f, via rank factorization."""
        return self.sub_from_map_images(f.cod, [f])

    def joint_kernel(self, mors: list[Mor]):
        """Kernel of a parallel family (same domain), with inclusion."""
        raise NotImplementedError

    def kernel(self, f: Mor):
        return self.joint_kernel([f])

    def cokernel(self, f: Mor):
        sub, mono = self.image(f)
        return self.quotient_by(f.cod, mono)

    # -- structure ops implemented per backend -------------------------------

    def unit(self):
        raise NotImplementedError

    def zero_obj(self):
        raise NotImplementedError

    def space_dim(self, x) -> int:
        """Dimension of the space morphism matrices act on."""
        raise NotImplementedError

    def dim(self, x) -> int:
        """Ambient dimension (of the presenting space)."""
        raise NotImplementedError

    def iso_class(self, x) -> tuple:
        raise NotImplementedError

    def tensor_obj(self, x, y):
        raise NotImplementedError

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def braiding(self, x, y) -> Mor:
        raise NotImplementedError

    def hom_basis(self, x, y) -> list[Mor]:
        raise NotImplementedError

    def direct_sum(self, objs):
        """(sum object, injections, projections)."""
        raise NotImplementedError

    def nil_part(self, x):
        """(subobject, inclusion): joint kernel of all maps to the unit."""
        raise NotImplementedError

    def unit_isotypic(self, x):
        """(subobject, inclusion): span of images of all maps from the unit."""
        raise NotImplementedError

    def sub_from_map_images(self, ambient, mors: list[Mor]):
        raise NotImplementedError

    def quotient_by(self, ambient, mono: Mor):
        raise NotImplementedError

    def section_of_epi(self, epi: Mor) -> Mor:
        raise NotImplementedError

    def sym_power(self, x, n: int):
        """(S^n(x), projection from the n-th tensor power object)."""
        raise NotImplementedError

    def divided_power(self, x, n: int):
        """(Γ^n(x), inclusion into the n-th tensor power object)."""
        raise NotImplementedError

    def tensor_power_obj(self, x, n: int):
        raise NotImplementedError

    def tensor_power_concat(self, x, i: int, j: int) -> Mor:
        """Identification tp_i(x) ⊗ tp_j(x) -> tp_{i+j}(x)."""
        raise NotImplementedError

    def dual_mor(self, f: Mor) -> Mor:
        """Dual morphism under the chosen self-duality pairings."""
        raise NotImplementedError

    def assert_valid_mor(self, f: Mor) -> None:
        """Backend-specific sanity (module-map / block-diagonal checks)."""


# ---------------------------------------------------------------------------
# vec


class VecBackend(Backend):
    """Finite-dimensional F_p vector spaces with the swap braiding."""

    name = "vec"

    def __init__(self, p: int):
        if not fpla.is_prime(p):
            raise ValueError(f"p={p} is not prime")
        self.p = p

    def unit(self):
        return VecObj(1)

    def zero_obj(self):
        return VecObj(0)

    def space_dim(self, x):
        return x.dim

    def dim(self, x):
        return x.dim

    def iso_class(self, x):
        return (x.dim,)

    def tensor_obj(self, x, y):
        return VecObj(x.dim * y.dim)

    def tensor_mor(self, f, g):
        return Mor(self.tensor_obj(f.dom, g.dom), self.tensor_obj(f.cod, g.cod),
                   fpla.kron(f.mat, g.mat, self.p))

    def braiding(self, x, y):
        mat = _swap_matrix(x.dim, y.dim)
        return Mor(self.tensor_obj(x, y), self.tensor_obj(y, x), mat)

    def hom_basis(self, x, y):
        out = []
        for i in range(y.dim):
            for j in range(x.dim):
                m = fpla.zeros(y.dim, x.dim)
                m[i, j] = 1
                out.append(Mor(x, y, m))
        return out

    def joint_kernel(self, mors):
        stacked = np.vstack([f.mat for f in mors])
        k = fpla.kernel_basis(stacked, self.p)
        return VecObj(k.shape[1]), Mor(VecObj(k.shape[1]), mors[0].dom, k)

    def direct_sum(self, objs):
        dims = [o.dim for o in objs]
        total = VecObj(sum(dims))
        injections, projections = [], []
        off = 0
        for o in objs:
            inj = fpla.zeros(total.dim, o.dim)
            inj[off:off + o.dim, :] = fpla.identity(o.dim)
            injections.append(Mor(o, total, inj))
            projections.append(Mor(total, o, inj.T.copy()))
            off += o.dim
        return total, injections, projections

    def nil_part(self, x):
        sub = VecObj(0)
        return sub, Mor(sub, x, fpla.zeros(x.dim, 0))

    def unit_isotypic(self, x):
        return x, self.id_mor(x)

    def sub_from_map_images(self, ambient, mors):
        cols = np.hstack([f.mat for f in mors]) if mors else fpla.zeros(ambient.dim, 0)
        basis = fpla.column_space_basis(cols, self.p)
        sub = VecObj(basis.shape[1])
        return sub, Mor(sub, ambient, basis)

    def quotient_by(self, ambient, mono):
        q, _ = fpla.quotient_maps(mono.mat, self.p)
        quot = VecObj(q.shape[0])
        return quot, Mor(ambient, quot, q)

    def section_of_epi(self, epi):
        return Mor(epi.cod, epi.dom, fpla.section_of_surjection(epi.mat, self.p))

    def tensor_power_obj(self, x, n):
        check_size(max(x.dim, 1) ** n if n else 1)
        return VecObj(x.dim ** n if n else 1)

    def tensor_power_concat(self, x, i, j):
        tp = self.tensor_power_obj(x, i + j)
        return self.id_mor(tp)

    def sym_power(self, x, n):
        return _kron_sym_power(self, x, n)

    def divided_power(self, x, n):
        return _kron_divided_power(self, x, n)

    def dual_mor(self, f):
        return Mor(f.cod, f.dom, f.mat.T.copy())


def _swap_matrix(da: int, db: int) -> np.ndarray:
    total = da * db
    mat = fpla.zeros(total, total)
    if total == 0:
        return mat
    old = np.arange(total)
    i, j = np.unravel_index(old, (da, db))
    new = np.ravel_multi_index((j, i), (db, da))
    mat[new, old] = 1
    return mat


def _tensor_power_swaps(backend: Backend, x, n: int) -> list[np.ndarray]:
    """Matrices of the adjacent braided transpositions on x^{⊗n} (kron backends)."""
    d = backend.dim(x)
    braid = backend.braiding(x, x).mat
    out = []
    for i in range(n - 1):
        left = fpla.identity(d ** i)
        right = fpla.identity(d ** (n - 2 - i))
        out.append(fpla.kron(fpla.kron(left, braid, backend.p), right, backend.p))
    return out


def _kron_sym_power(backend: Backend, x, n: int):
    tp = backend.tensor_power_obj(x, n)
    if n <= 1:
        return tp, backend.id_mor(tp)
    swaps = _tensor_power_swaps(backend, x, n)
    total = backend.space_dim(tp)
    cols = np.hstack([(s - fpla.identity(total)) % backend.p for s in swaps])
    q, sec = fpla.quotient_maps(cols, backend.p)
    if isinstance(tp, V4Obj):
        xq = fpla.matmul(fpla.matmul(q, tp.x, 2), sec, 2)
        obj = V4Obj(q.shape[0], xq)
    else:
        obj = VecObj(q.shape[0])
    return obj, Mor(tp, obj, q)


def _kron_divided_power(backend: Backend, x, n: int):
    tp = backend.tensor_power_obj(x, n)
    if n <= 1:
        return tp, backend.id_mor(tp)
    swaps = _tensor_power_swaps(backend, x, n)
    total = backend.space_dim(tp)
    stacked = np.vstack([(s - fpla.identity(total)) % backend.p for s in swaps])
    k = fpla.kernel_basis(stacked, backend.p)
    if isinstance(tp, V4Obj):
        xk = fpla.solve(k, fpla.matmul(tp.x, k, 2), 2)
        obj = V4Obj(k.shape[1], xk)
    else:
        obj = VecObj(k.shape[1])
    return obj, Mor(obj, tp, k)


# ---------------------------------------------------------------------------
# ver4plus


class V4Backend(Backend):
    """Modules over k[x]/x^2 in characteristic 2 with the twisted braiding."""

    name = "ver4plus"
    p = 2

    def __init__(self):
        self._pairing_cache: dict[bytes, np.ndarray] = {}

    def unit(self):
        return V4Obj(1, fpla.zeros(1, 1))

    def zero_obj(self):
        return V4Obj(0, fpla.zeros(0, 0))

    def space_dim(self, x):
        return x.dim

    def dim(self, x):
        return x.dim

    def iso_class(self, x):
        r = fpla.rank(x.x, 2)
        return (x.dim - 2 * r, r)

    def eq_obj(self, x, y):
        return x == y

    def tensor_obj(self, x, y):
        mat = (fpla.kron(x.x, fpla.identity(y.dim), 2)
               + fpla.kron(fpla.identity(x.dim), y.x, 2)) % 2
        return V4Obj(x.dim * y.dim, mat)

    def tensor_mor(self, f, g):
        return Mor(self.tensor_obj(f.dom, g.dom), self.tensor_obj(f.cod, g.cod),
                   fpla.kron(f.mat, g.mat, 2))

    def braiding(self, x, y):
        """v ⊗ w ↦ w ⊗ v + xw ⊗ xv."""
        swap = _swap_matrix(x.dim, y.dim)
        corr = fpla.kron(y.x, x.x, 2)
        mat = fpla.matmul((fpla.identity(x.dim * y.dim) + corr) % 2, swap, 2)
        return Mor(self.tensor_obj(x, y), self.tensor_obj(y, x), mat)

    def hom_basis(self, x, y):
        if x.dim == 0 or y.dim == 0:
            return []
        left = fpla.kron(fpla.identity(y.dim), x.x.T.copy(), 2)
        right = fpla.kron(y.x, fpla.identity(x.dim), 2)
        ker = fpla.kernel_basis((left - right) % 2, 2)
        return [Mor(x, y, ker[:, j].reshape(y.dim, x.dim).copy())
                for j in range(ker.shape[1])]

    def joint_kernel(self, mors):
        stacked = np.vstack([f.mat for f in mors])
        k = fpla.kernel_basis(stacked, 2)
        dom = mors[0].dom
        xk = fpla.solve(k, fpla.matmul(dom.x, k, 2), 2)
        sub = V4Obj(k.shape[1], xk)
        return sub, Mor(sub, dom, k)

    def direct_sum(self, objs):
        dims = [o.dim for o in objs]
        total_dim = sum(dims)
        x = fpla.zeros(total_dim, total_dim)
        off = 0
        for o in objs:
            x[off:off + o.dim, off:off + o.dim] = o.x
            off += o.dim
        total = V4Obj(total_dim, x)
        injections, projections = [], []
        off = 0
        for o in objs:
            inj = fpla.zeros(total_dim, o.dim)
            inj[off:off + o.dim, :] = fpla.identity(o.dim)
            injections.append(Mor(o, total, inj))
            projections.append(Mor(total, o, inj.T.copy()))
            off += o.dim
        return total, injections, projections

    def nil_part(self, x):
        """The joint kernel of all maps to 1 is the image of the x-action."""
        basis = fpla.column_space_basis(x.x, 2)
        sub = V4Obj(basis.shape[1], fpla.zeros(basis.shape[1], basis.shape[1]))
        return sub, Mor(sub, x, basis)

    def unit_isotypic(self, x):
        k = fpla.kernel_basis(x.x, 2)
        sub = V4Obj(k.shape[1], fpla.zeros(k.shape[1], k.shape[1]))
        return sub, Mor(sub, x, k)

    def sub_from_map_images(self, ambient, mors):
        cols = (np.hstack([f.mat for f in mors])
                if mors else fpla.zeros(ambient.dim, 0))
        basis = fpla.column_space_basis(cols, 2)
        xs = fpla.solve(basis, fpla.matmul(ambient.x, basis, 2), 2)
        if xs is None:
            raise ValueError("span is not stable under the generator action")
        sub = V4Obj(basis.shape[1], xs)
        return sub, Mor(sub, ambient, basis)

    def quotient_by(self, ambient, mono):
        q, sec = fpla.quotient_maps(mono.mat, 2)
        xq = fpla.matmul(fpla.matmul(q, ambient.x, 2), sec, 2)
        quot = V4Obj(q.shape[0], xq)
        return quot, Mor(ambient, quot, q)

    def section_of_epi(self, epi):
        return Mor(epi.cod, epi.dom, fpla.section_of_surjection(epi.mat, 2))

    def tensor_power_obj(self, x, n):
        check_size(max(x.dim, 1) ** n if n else 1)
        obj = self.unit()
        for _ in range(n):
            obj = self.tensor_obj(obj, x)
        return V4Obj(obj.dim, obj.x)

    def tensor_power_concat(self, x, i, j):
        tp = self.tensor_power_obj(x, i + j)
        return self.id_mor(tp)

    def sym_power(self, x, n):
        return _kron_sym_power(self, x, n)

    def divided_power(self, x, n):
        return _kron_divided_power(self, x, n)

    def _pairing(self, obj) -> np.ndarray:
        """Symmetric perfect pairing identifying obj with its dual."""
        key = (obj.dim, obj.x.tobytes())
        cached = self._pairing_cache.get(key)
        if cached is not None:
            return cached
        u = fpla.column_space_basis(obj.x, 2)
        b = u.shape[1]
        vs = fpla.solve(obj.x, u, 2) if b else fpla.zeros(obj.dim, 0)
        ker = fpla.kernel_basis(obj.x, 2)
        ws = fpla.extend_basis(u, ker, 2)
        cols = []
        for i in range(b):
            cols.append(u[:, i])
            cols.append(vs[:, i])
        for i in range(ws.shape[1]):
            cols.append(ws[:, i])
        t = (np.stack(cols, axis=1) if cols else fpla.zeros(0, 0))
        bnorm = fpla.zeros(obj.dim, obj.dim)
        for i in range(b):
            bnorm[2 * i, 2 * i + 1] = 1
            bnorm[2 * i + 1, 2 * i] = 1
        for i in range(2 * b, obj.dim):
            bnorm[i, i] = 1
        tinv = fpla.inverse(t, 2) if obj.dim else fpla.zeros(0, 0)
        pairing = fpla.matmul(fpla.matmul(tinv.T.copy(), bnorm, 2), tinv, 2)
        if not np.array_equal(fpla.matmul(obj.x.T.copy(), pairing, 2),
                              fpla.matmul(pairing, obj.x, 2)):
            raise AssertionError("self-duality pairing fails the module condition")
        self._pairing_cache[key] = pairing
        return pairing

    def dual_mor(self, f):
        bx = self._pairing(f.dom)
        by = self._pairing(f.cod)
        bx_inv = fpla.inverse(bx, 2) if f.dom.dim else fpla.zeros(0, 0)
        mat = fpla.matmul(fpla.matmul(bx_inv, f.mat.T.copy(), 2), by, 2)
        out = Mor(f.cod, f.dom, mat)
        self.assert_valid_mor(out)
        return out

    def assert_valid_mor(self, f):
        left = fpla.matmul(f.mat, f.dom.x, 2)
        right = fpla.matmul(f.cod.x, f.mat, 2)
        if not np.array_equal(left, right):
            raise AssertionError("not a module map for the generator action")


# ---------------------------------------------------------------------------
# verp


class VerpObj:
    """Object of Ver_p presented by a concrete C_p-module.

    Tensor products keep the honest underlying space (so the monoidal
    structure is strict on the nose); projective summands in a presentation
    are invisible to every Ver_p-level question because all structural
    computations pass through the multiplicity spaces of the simples.
    """

    def __init__(self, p: int, x, validate: bool = True):
        self.p = p
        self.x = fpla.normalize(x, p)
        if self.x.shape[0] != self.x.shape[1]:
            raise ValueError("generator action must be square")
        if validate and fpla.mat_pow(self.x, p, p).any():
            raise ValueError("generator action is not nilpotent of order <= p")

    @property
    def dim(self) -> int:
        return self.x.shape[0]

    def __eq__(self, other):
        return (isinstance(other, VerpObj) and self.p == other.p
                and (self.x is other.x or np.array_equal(self.x, other.x)))

    def __repr__(self):
        return f"VerpObj(p={self.p}, dim={self.dim})"


class VerpBackend(Backend):
    """The semisimplification of Rep C_p.

    Morphisms are stored as honest module maps between the presenting
    modules; equality is equality modulo negligibles, decided by the
    multiplicity-space pairing.  Kernels, images, quotients and spans are
    computed on multiplicity spaces (rank factorizations per simple type)
    and re-embedded as module maps through cached semisimple splittings.
    """

    name = "verp"

    def __init__(self, p: int):
        if not fpla.is_prime(p):
            raise ValueError(f"p={p} is not prime")
        self.p = p
        self._split_cache: dict = {}
        self._powker_cache: dict = {}
        self._pairing_cache: dict = {}
        self._sym_cache: dict = {}

    # -- presentations and bookkeeping --------------------------------------

    def obj_from_mults(self, mults) -> VerpObj:
        obj = verp.VerObject(self.p, tuple(int(m) for m in mults))
        return VerpObj(self.p, verp.canonical_module(obj).x, validate=False)

    def unit(self):
        return self.obj_from_mults((1,) + (0,) * (self.p - 2))

    def zero_obj(self):
        return VerpObj(self.p, fpla.zeros(0, 0), validate=False)

    def space_dim(self, x):
        return x.dim

    def dim(self, x):
        return x.dim

    def _key(self, x: VerpObj):
        return (x.dim, x.x.tobytes())

    def _split(self, x: VerpObj) -> verp.Splitting:
        key = self._key(x)
        got = self._split_cache.get(key)
        if got is None:
            got = verp.split_raw(x.x, self.p)
            self._split_cache[key] = got
        return got

    def _dom_kernels(self, x: VerpObj):
        key = ("dom", self._key(x))
        got = self._powker_cache.get(key)
        if got is None:
            got = verp.power_kernel_chain(x.x, self.p)
            self._powker_cache[key] = got
        return got

    def _cod_data(self, x: VerpObj):
        key = ("cod", self._key(x))
        got = self._powker_cache.get(key)
        if got is None:
            powers = [fpla.identity(x.dim)]
            for _ in range(self.p - 2):
                powers.append(fpla.matmul(powers[-1], x.x, self.p))
            kers_t = verp.power_kernel_chain(x.x.T.copy(), self.p)
            got = (powers, kers_t)
            self._powker_cache[key] = got
        return got

    def ver_object(self, x: VerpObj) -> verp.VerObject:
        return self._split(x).obj

    def iso_class(self, x):
        return tuple(self._split(x).obj.mults)

    def is_zero_obj(self, x):
        return self._split(x).obj.total_mult == 0

    # -- morphism equality: modulo negligibles --------------------------------

    def is_negligible_mor(self, f: Mor) -> bool:
        delta = f.mat
        if not delta.any():
            return True
        kers = self._dom_kernels(f.dom)
        powers_c, kers_t = self._cod_data(f.cod)
        for s in range(1, self.p):
            w = kers[s - 1]
            phi = kers_t[s - 1]
            if w.shape[1] == 0 or phi.shape[1] == 0:
                continue
            probe = fpla.matmul(
                phi.T.copy(),
                fpla.matmul(powers_c[s - 1], fpla.matmul(delta, w, self.p),
                            self.p), self.p)
            if probe.any():
                return False
        return True

    def eq_mor(self, f: Mor, g: Mor) -> bool:
        if not (self.eq_obj(f.dom, g.dom) and self.eq_obj(f.cod, g.cod)):
            return False
        if np.array_equal(f.mat, g.mat):
            return True
        return self.is_negligible_mor(Mor(f.dom, f.cod, (f.mat - g.mat) % self.p))

    def is_zero_mor(self, f: Mor) -> bool:
        return self.is_negligible_mor(f)

    # -- block calculus --------------------------------------------------------

    def blocks_of(self, f: Mor) -> np.ndarray:
        sd, sc = self._split(f.dom), self._split(f.cod)
        rep = fpla.matmul(fpla.matmul(sc.prj, f.mat, self.p), sd.emb, self.p)
        return verp.extract_blocks(rep, sd.obj, sc.obj)

    def mor_from_blocks(self, dom: VerpObj, cod: VerpObj, blocks) -> Mor:
        sd, sc = self._split(dom), self._split(cod)
        rep = verp.materialize_blocks(blocks, sd.obj, sc.obj)
        mat = fpla.matmul(fpla.matmul(sc.emb, rep, self.p), sd.prj, self.p)
        return Mor(dom, cod, mat)

    def _canon_obj(self, mults) -> VerpObj:
        return self.obj_from_mults(mults)

    # -- monoidal structure -----------------------------------------------------

    def tensor_obj(self, x, y):
        check_size(max(x.dim, 1) * max(y.dim, 1))
        mat = (fpla.kron(x.x, fpla.identity(y.dim), self.p)
               + fpla.kron(fpla.identity(x.dim), y.x, self.p)) % self.p
        return VerpObj(self.p, mat, validate=False)

    def tensor_mor(self, f, g):
        return Mor(self.tensor_obj(f.dom, g.dom), self.tensor_obj(f.cod, g.cod),
                   fpla.kron(f.mat, g.mat, self.p))

    def braiding(self, x, y):
        return Mor(self.tensor_obj(x, y), self.tensor_obj(y, x),
                   _swap_matrix(x.dim, y.dim))

    # -- structural operations (all on multiplicity spaces) ---------------------

    def hom_basis(self, x, y):
        ox, oy = self._split(x).obj, self._split(y).obj
        xoff = verp.mult_offsets(ox)
        yoff = verp.mult_offsets(oy)
        out = []
        for s in range(1, self.p):
            for i in range(oy.mults[s - 1]):
                for j in range(ox.mults[s - 1]):
                    blocks = fpla.zeros(oy.total_mult, ox.total_mult)
                    blocks[yoff[s - 1] + i, xoff[s - 1] + j] = 1
                    out.append(self.mor_from_blocks(x, y, blocks))
        return out

    def _per_simple_slices(self, obj: verp.VerObject):
        offs = verp.mult_offsets(obj)
        return [slice(offs[s - 1], offs[s - 1] + obj.mults[s - 1])
                for s in range(1, self.p)]

    def joint_kernel(self, mors):
        dom = mors[0].dom
        od = self._split(dom).obj
        dsl = self._per_simple_slices(od)
        all_blocks = [self.blocks_of(f) for f in mors]
        cod_objs = [self._split(f.cod).obj for f in mors]
        mults, blocks = [], []
        for s in range(1, self.p):
            stacked = []
            for b, oc in zip(all_blocks, cod_objs):
                csl = self._per_simple_slices(oc)[s - 1]
                stacked.append(b[csl, dsl[s - 1]])
            k = fpla.kernel_basis(np.vstack(stacked), self.p)
            mults.append(k.shape[1])
            blocks.append(k)
        sub = self._canon_obj(mults)
        bl = _assemble_blocks(blocks, od, verp.VerObject(self.p, tuple(mults)))
        return sub, self.mor_from_blocks(sub, dom, bl)

    def sub_from_map_images(self, ambient, mors):
        oa = self._split(ambient).obj
        asl = self._per_simple_slices(oa)
        mults, blocks = [], []
        all_blocks = [(self.blocks_of(f), self._split(f.dom).obj) for f in mors]
        for s in range(1, self.p):
            cols = [fpla.zeros(oa.mults[s - 1], 0)]
            for b, od in all_blocks:
                dsl = self._per_simple_slices(od)[s - 1]
                cols.append(b[asl[s - 1], dsl])
            basis = fpla.column_space_basis(np.hstack(cols), self.p)
            mults.append(basis.shape[1])
            blocks.append(basis)
        sub = self._canon_obj(mults)
        bl = _assemble_blocks(blocks, oa, verp.VerObject(self.p, tuple(mults)))
        return sub, self.mor_from_blocks(sub, ambient, bl)

    def quotient_by(self, ambient, mono):
        oa = self._split(ambient).obj
        om = self._split(mono.dom).obj
        asl = self._per_simple_slices(oa)
        msl = self._per_simple_slices(om)
        mb = self.blocks_of(mono)
        mults, blocks = [], []
        for s in range(1, self.p):
            q, _ = fpla.quotient_maps(mb[asl[s - 1], msl[s - 1]], self.p)
            mults.append(q.shape[0])
            blocks.append(q)
        quot = self._canon_obj(mults)
        bl = _assemble_blocks(blocks, verp.VerObject(self.p, tuple(mults)), oa)
        return quot, self.mor_from_blocks(ambient, quot, bl)

    def nil_part(self, x):
        ox = self._split(x).obj
        mults = (0,) + tuple(ox.mults[1:])
        blocks = [fpla.identity(m) if s > 1 else fpla.zeros(ox.mults[0], 0)
                  for s, m in zip(range(1, self.p), mults)]
        sub = self._canon_obj(mults)
        bl = _assemble_blocks(blocks, ox, verp.VerObject(self.p, mults))
        return sub, self.mor_from_blocks(sub, x, bl)

    def unit_isotypic(self, x):
        ox = self._split(x).obj
        mults = (ox.mults[0],) + (0,) * (self.p - 2)
        blocks = [fpla.identity(ox.mults[0])] + [
            fpla.zeros(ox.mults[s], 0) for s in range(1, self.p - 1)]
        sub = self._canon_obj(mults)
        bl = _assemble_blocks(blocks, ox, verp.VerObject(self.p, mults))
        return sub, self.mor_from_blocks(sub, x, bl)

    def direct_sum(self, objs):
        total_dim = sum(o.dim for o in objs)
        x = fpla.zeros(total_dim, total_dim)
        off = 0
        for o in objs:
            x[off:off + o.dim, off:off + o.dim] = o.x
            off += o.dim
        total = VerpObj(self.p, x, validate=False)
        injections, projections = [], []
        off = 0
        for o in objs:
            inj = fpla.zeros(total_dim, o.dim)
            inj[off:off + o.dim, :] = fpla.identity(o.dim)
            injections.append(Mor(o, total, inj))
            projections.append(Mor(total, o, inj.T.copy()))
            off += o.dim
        return total, injections, projections

    def section_of_epi(self, epi):
        od = self._split(epi.dom).obj
        oc = self._split(epi.cod).obj
        dsl = self._per_simple_slices(od)
        csl = self._per_simple_slices(oc)
        eb = self.blocks_of(epi)
        blocks = [fpla.section_of_surjection(eb[csl[s - 1], dsl[s - 1]], self.p)
                  for s in range(1, self.p)]
        bl = _assemble_blocks(blocks, od, oc)
        return self.mor_from_blocks(epi.cod, epi.dom, bl)

    def factor_through_mono(self, f, mono):
        fb = self.blocks_of(f)
        mb = self.blocks_of(mono)
        g = fpla.solve(mb, fb, self.p)
        if g is None:
            raise ValueError("morphism does not factor through the mono")
        out = self.mor_from_blocks(f.dom, mono.dom, g)
        if not self.eq_mor(self.compose(mono, out), f):
            raise ValueError("mono factorization failed")
        return out

    def factor_through_epi(self, f, epi):
        fb = self.blocks_of(f)
        eb = self.blocks_of(epi)
        g = fpla.solve_left(eb, fb, self.p)
        if g is None:
            raise ValueError("morphism does not factor through the epi")
        out = self.mor_from_blocks(epi.cod, f.cod, g)
        if not self.eq_mor(self.compose(out, epi), f):
            raise ValueError("epi factorization failed")
        return out

    def span_contains(self, big, small):
        bb = self.blocks_of(big)
        sb = self.blocks_of(small)
        ob = self._split(big.cod).obj
        obd = self._split(big.dom).obj
        osd = self._split(small.dom).obj
        csl = self._per_simple_slices(ob)
        bsl = self._per_simple_slices(obd)
        ssl = self._per_simple_slices(osd)
        for s in range(1, self.p):
            if not fpla.in_column_span(sb[csl[s - 1], ssl[s - 1]],
                                       bb[csl[s - 1], bsl[s - 1]], self.p):
                return False
        return True

    def spans_equal(self, a, b):
        return self.span_contains(a, b) and self.span_contains(b, a)

    def image(self, f):
        return self.sub_from_map_images(f.cod, [f])

    # -- symmetric structure -----------------------------------------------------

    def _sym_data(self, x: VerpObj, n: int) -> verp.SymPowerData:
        key = (self._key(x), n)
        got = self._sym_cache.get(key)
        if got is None:
            got = verp.symmetric_power_data_raw(x.x, self.p, n)
            self._sym_cache[key] = got
        return got

    def tensor_power_obj(self, x, n):
        return VerpObj(self.p, verp.tensor_power_x(x.x, self.p, n), validate=False)

    def tensor_power_concat(self, x, i, j):
        tp = self.tensor_power_obj(x, i + j)
        return self.id_mor(tp)

    def sym_power(self, x, n):
        data = self._sym_data(x, n)
        tp = self.tensor_power_obj(x, n)
        power = self._canon_obj(data.power.mults)
        rep = verp.materialize_blocks(data.projection_blocks, data.tensor_power,
                                      data.power)
        mat = fpla.matmul(rep, data.splitting.prj, self.p)
        return power, Mor(tp, power, mat)

    def divided_power(self, x, n):
        data = self._sym_data(x, n)
        tp = self.tensor_power_obj(x, n)
        inv = self._canon_obj(data.invariants.mults)
        rep = verp.materialize_blocks(data.inclusion_blocks, data.invariants,
                                      data.tensor_power)
        mat = fpla.matmul(data.splitting.emb, rep, self.p)
        return inv, Mor(inv, tp, mat)

    # -- duality -------------------------------------------------------------------

    def _pairing(self, x: VerpObj) -> np.ndarray:
        key = self._key(x)
        got = self._pairing_cache.get(key)
        if got is None:
            got = verp.self_pairing(x.x, self.p)
            self._pairing_cache[key] = got
        return got

    def dual_mor(self, f):
        bx = self._pairing(f.dom)
        by = self._pairing(f.cod)
        bx_inv = fpla.inverse(bx, self.p) if f.dom.dim else fpla.zeros(0, 0)
        mat = fpla.matmul(fpla.matmul(bx_inv, f.mat.T.copy(), self.p), by, self.p)
        out = Mor(f.cod, f.dom, mat)
        self.assert_valid_mor(out)
        return out

    def assert_valid_mor(self, f):
        left = fpla.matmul(f.mat, f.dom.x, self.p)
        right = fpla.matmul(f.cod.x, f.mat, self.p)
        if not np.array_equal(left, right):
            raise AssertionError("not a module map for the generator action")


def _assemble_blocks(blocks: list[np.ndarray], cod_obj, dom_obj) -> np.ndarray:
    """Per-simple blocks (cod_mults[s] x dom_mults[s]) into a full matrix."""
    out = fpla.zeros(cod_obj.total_mult, dom_obj.total_mult)
    doff = verp.mult_offsets(dom_obj)
    coff = verp.mult_offsets(cod_obj)
    for s in range(1, dom_obj.p):
        b = blocks[s - 1]
        out[coff[s - 1]:coff[s - 1] + b.shape[0],
            doff[s - 1]:doff[s - 1] + b.shape[1]] = b
    return out


def get_backend(name: str, p: int) -> Backend:
    if name == "vec":
        return VecBackend(p)
    if name == "verp":
        return VerpBackend(p)
    if name == "ver4plus":
        if p != 2:
            raise ValueError("ver4plus forces p=2")
        return V4Backend()
    raise ValueError(f"unknown backend {name!r}")
