"""The category Rep C_p over F_p and its semisimplification Ver_p.

A C_p-module is presented by the nilpotent matrix of its generator action
(x^p = 0).  Its isomorphism class is a multiset of Jordan block sizes; the
semisimplification discards blocks of size p and renames a block of size
s < p to the simple object L_s.  Morphisms of Ver_p are C_p-module maps
taken modulo negligibles, where f is negligible iff trace(f∘g) = 0 for all
g in the reverse hom-space.

Canonical presentations list blocks in ascending size.  The multiplicity
space of L_s inside a canonical presentation has a preferred basis given by
the block inclusions, and a module map F between canonical presentations
induces, on that basis, the block matrix with entries

    trace(pr_b ∘ F ∘ incl_a) / s   mod p,

which is exactly the morphism of Ver_p that F represents.  All tensor
structure is computed on honest presenting modules and read back through
this extraction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fpla
from .guard import check_size


# ---------------------------------------------------------------------------
# modules and Jordan data


@dataclass
class CpModule:
    """A k[x]/(x^p)-module given by the matrix of x."""

    p: int
    x: np.ndarray

    def __post_init__(self):
        if not fpla.is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        self.x = fpla.normalize(self.x, self.p)
        if self.x.shape[0] != self.x.shape[1]:
            raise ValueError("generator action must be square")
        if fpla.mat_pow(self.x, self.p, self.p).any():
            raise ValueError("generator action is not nilpotent of order <= p")

    @property
    def dim(self) -> int:
        return self.x.shape[0]


@dataclass(frozen=True)
class JordanType:
    """counts[s-1] = number of Jordan blocks of size s, for s = 1..p."""

    p: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.p:
            raise ValueError("counts must have length p")

    @property
    def dim(self) -> int:
        return sum((s + 1) * c for s, c in enumerate(self.counts))

    def sizes(self) -> list[int]:
        out: list[int] = []
        for s, c in enumerate(self.counts):
            out.extend([s + 1] * c)
        return out


@dataclass(frozen=True)
class VerObject:
    """Object of Ver_p: multiplicities of the simples L_1 .. L_{p-1}."""

    p: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) != self.p - 1:
            raise ValueError("mults must have length p-1")
        if any(m < 0 for m in self.mults):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def dim(self) -> int:
        """Dimension of the canonical presenting module."""
        return sum((i + 1) * m for i, m in enumerate(self.mults))

    @property
    def total_mult(self) -> int:
        return sum(self.mults)

    def is_zero(self) -> bool:
        return self.total_mult == 0


def jordan_block(s: int) -> np.ndarray:
    """Nilpotent single block: x e_1 = 0 and x e_j = e_{j-1}."""
    j = fpla.zeros(s, s)
    for t in range(1, s):
        j[t - 1, t] = 1
    return j


def module_from_sizes(p: int, sizes: list[int]) -> CpModule:
    n = sum(sizes)
    x = fpla.zeros(n, n)
    off = 0
    for s in sizes:
        x[off:off + s, off:off + s] = jordan_block(s)
        off += s
    return CpModule(p, x)


def canonical_module(obj: VerObject) -> CpModule:
    """Presenting module of a Ver_p object: blocks of size < p, ascending."""
    sizes: list[int] = []
    for i, m in enumerate(obj.mults):
        sizes.extend([i + 1] * m)
    return module_from_sizes(obj.p, sizes)


def jordan_type(m: CpModule) -> JordanType:
    """Jordan type recovered from the rank sequence of the powers of x."""
    p = m.p
    ranks = [m.dim]
    power = fpla.identity(m.dim)
    for _ in range(p):
        power = fpla.matmul(power, m.x, p)
        ranks.append(fpla.rank(power, p))
    ranks.append(0)
    counts = tuple(ranks[s - 1] - 2 * ranks[s] + ranks[s + 1] for s in range(1, p + 1))
    return JordanType(p, counts)


def semisimplify(t: JordanType) -> VerObject:
    """Discard blocks of size p; a block of size s < p becomes L_s."""
    return VerObject(t.p, tuple(t.counts[: t.p - 1]))


def tensor_module(a: CpModule, b: CpModule) -> CpModule:
    """Tensor product in Rep C_p: x acts as x⊗1 + 1⊗x."""
    if a.p != b.p:
        raise ValueError("modules live over different primes")
    p = a.p
    x = (fpla.kron(a.x, fpla.identity(b.dim), p)
         + fpla.kron(fpla.identity(a.dim), b.x, p)) % p
    return CpModule(p, x)


def green_tensor(a: CpModule, b: CpModule) -> JordanType:
    """Jordan type of the tensor product module (the Green-ring oracle)."""
    return jordan_type(tensor_module(a, b))


def fuse_simples(p: int, i: int, j: int) -> tuple[int, ...]:
    """Multiplicities of L_i ⊗ L_j in Ver_p."""
    if not (1 <= i < p and 1 <= j < p):
        raise ValueError("simple indices must lie in 1..p-1")
    mults = [0] * (p - 1)
    for k in range(1, min(i, j, p - i, p - j) + 1):
        mults[abs(i - j) + 2 * k - 1 - 1] += 1
    return tuple(mults)


def fuse(a: VerObject, b: VerObject) -> VerObject:
    """Bilinear extension of the simple-by-simple fusion rule."""
    if a.p != b.p:
        raise ValueError("objects live over different primes")
    p = a.p
    out = [0] * (p - 1)
    for i, ma in enumerate(a.mults):
        if ma == 0:
            continue
        for j, mb in enumerate(b.mults):
            if mb == 0:
                continue
            for k, mk in enumerate(fuse_simples(p, i + 1, j + 1)):
                out[k] += ma * mb * mk
    return VerObject(p, tuple(out))


# ---------------------------------------------------------------------------
# Jordan bases and semisimplification splittings


def nilpotent_jordan_basis(x: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """Basis change into Jordan form for a nilpotent matrix.

    Returns (sizes, P) with sizes ascending and x @ P == P @ J, where J is
    the block-diagonal of jordan_block(s) in the same order.  Within each
    block the columns run from the socle vector up to the chain top.
    """
    n = x.shape[0]
    if n == 0:
        return [], fpla.zeros(0, 0)
    powers = [fpla.identity(n)]
    while powers[-1].any():
        powers.append(fpla.matmul(powers[-1], x, p))
    m = len(powers) - 1
    kernels = [fpla.kernel_basis(powers[t], p) for t in range(m + 1)]

    tops: list[tuple[int, np.ndarray]] = []
    for t in range(m, 0, -1):
        span = fpla.IncrementalSpan(n, p)
        span.add_columns(kernels[t - 1])
        for height, v in tops:
            span.add(fpla.matmul(powers[height - t], v.reshape(-1, 1), p).ravel())
        cand = kernels[t]
        for j in range(cand.shape[1]):
            v = cand[:, j]
            if span.add(v):
                tops.append((t, v.copy()))

    chains = sorted(tops, key=lambda tv: tv[0])
    sizes = [t for t, _ in chains]
    cols = []
    for t, v in chains:
        for e in range(t - 1, -1, -1):
            cols.append(fpla.matmul(powers[e], v.reshape(-1, 1), p).ravel())
    basis = np.stack(cols, axis=1) if cols else fpla.zeros(n, 0)

    jmat = module_from_sizes(p, sizes).x if sizes else fpla.zeros(0, 0)
    if not np.array_equal(fpla.matmul(x, basis, p), fpla.matmul(basis, jmat, p)):
        raise AssertionError("jordan basis does not conjugate x into Jordan form")
    if fpla.rank(basis, p) != n:
        raise AssertionError("jordan basis is singular")
    return sizes, basis


@dataclass
class Splitting:
    """Chosen splitting M ≅ canonical(obj) ⊕ (negligible part) in Rep C_p.

    emb embeds the canonical presenting module into M, prj retracts onto it;
    prj @ emb is the identity and emb @ prj differs from the identity by a
    map factoring through the size-p blocks.
    """

    obj: VerObject
    emb: np.ndarray
    prj: np.ndarray


def semisimple_splitting(module: CpModule) -> Splitting:
    return split_raw(module.x, module.p)


def split_raw(x: np.ndarray, p: int) -> Splitting:
    """Splitting off the non-negligible part of a nilpotent action matrix."""
    ranks = [x.shape[0]]
    power = fpla.identity(x.shape[0])
    for _ in range(p):
        power = fpla.matmul(power, x, p)
        ranks.append(fpla.rank(power, p))
    ranks.append(0)
    counts = tuple(ranks[s - 1] - 2 * ranks[s] + ranks[s + 1] for s in range(1, p + 1))
    obj = VerObject(p, counts[: p - 1])
    canon = canonical_module(obj)
    if counts[p - 1] == 0 and np.array_equal(x, canon.x):
        ident = fpla.identity(x.shape[0])
        return Splitting(obj, ident, ident.copy())
    sizes, basis = nilpotent_jordan_basis(x, p)
    keep = obj.dim
    inv = fpla.inverse(basis, p) if x.shape[0] else fpla.zeros(0, 0)
    return Splitting(obj, basis[:, :keep].copy(), inv[:keep, :].copy())


def power_kernel_chain(x: np.ndarray, p: int) -> list[np.ndarray]:
    """Kernel bases of x^s for s = 1..p-1 without forming matrix powers.

    ker(x^{s+1}) is the preimage of ker(x^s) under x: with F_s a basis of
    functionals vanishing on ker(x^s), it is ker(F_s @ x); F_s shrinks as s
    grows, so each step is a small elimination.
    """
    kers = [fpla.kernel_basis(x, p)]
    for _ in range(p - 2):
        funcs = fpla.kernel_basis(kers[-1].T.copy(), p).T.copy()
        if funcs.shape[0] == 0:
            kers.append(fpla.identity(x.shape[0]))
            continue
        kers.append(fpla.kernel_basis(fpla.matmul(funcs, x, p), p))
    return kers


def power_kernel_data(x: np.ndarray, p: int):
    """(powers [x^0..x^{p-2}], dom kernels, cod transpose-kernels).

    Indexed by s = 1..p-1 (index 0 unused in the kernel lists); drives the
    negligibility test: a module map d: M -> N is negligible iff for every
    s the pairing ker((x_N^T)^s)^T · x_N^{s-1} · d · ker(x_M^s) vanishes.
    """
    powers = [fpla.identity(x.shape[0])]
    for _ in range(p - 2):
        powers.append(fpla.matmul(powers[-1], x, p))
    kers = [None] + power_kernel_chain(x, p)
    kers_t = [None] + power_kernel_chain(x.T.copy(), p)
    return powers, kers, kers_t


def self_pairing(x: np.ndarray, p: int) -> np.ndarray:
    """Symmetric-enough perfect pairing B with x^T B + B x = 0.

    Identifies the module with its dual: on a single Jordan block J_s the
    pairing is the alternating anti-diagonal; a general module is conjugated
    into Jordan form first.
    """
    n = x.shape[0]
    sizes, basis = nilpotent_jordan_basis(x, p)
    bnorm = fpla.zeros(n, n)
    off = 0
    for s in sizes:
        for i in range(s):
            bnorm[off + i, off + s - 1 - i] = pow(-1, i, p)
        off += s
    inv = fpla.inverse(basis, p) if n else fpla.zeros(0, 0)
    pairing = fpla.matmul(fpla.matmul(inv.T.copy(), bnorm, p), inv, p)
    if not np.array_equal(fpla.matmul(x.T.copy(), pairing, p),
                          (-fpla.matmul(pairing, x, p)) % p):
        raise AssertionError("self pairing fails the module condition")
    return pairing


# ---------------------------------------------------------------------------
# multiplicity-space block calculus

def module_offsets(obj: VerObject) -> list[int]:
    """Starting coordinate of each simple's blocks in the canonical module."""
    offs = [0]
    for s in range(1, obj.p):
        offs.append(offs[-1] + s * obj.mults[s - 1])
    return offs


def mult_offsets(obj: VerObject) -> list[int]:
    offs = [0]
    for s in range(1, obj.p):
        offs.append(offs[-1] + obj.mults[s - 1])
    return offs


def extract_blocks(rep: np.ndarray, dom: VerObject, cod: VerObject) -> np.ndarray:
    """Block matrix on multiplicity spaces induced by a module map.

    rep is a module map between the canonical presentations of dom and cod.
    The result is a (cod.total_mult x dom.total_mult) matrix, block-diagonal
    across simple types.
    """
    p = dom.p
    out = fpla.zeros(cod.total_mult, dom.total_mult)
    moff_d, moff_c = module_offsets(dom), module_offsets(cod)
    boff_d, boff_c = mult_offsets(dom), mult_offsets(cod)
    for s in range(1, p):
        ca, cb = dom.mults[s - 1], cod.mults[s - 1]
        if ca == 0 or cb == 0:
            continue
        sub = rep[moff_c[s - 1]:moff_c[s - 1] + cb * s,
                  moff_d[s - 1]:moff_d[s - 1] + ca * s]
        four = sub.reshape(cb, s, ca, s)
        traces = np.diagonal(four, axis1=1, axis2=3).sum(axis=-1) % p
        inv_s = pow(s, p - 2, p)
        out[boff_c[s - 1]:boff_c[s - 1] + cb,
            boff_d[s - 1]:boff_d[s - 1] + ca] = (traces * inv_s) % p
    return out


def materialize_blocks(blocks: np.ndarray, dom: VerObject, cod: VerObject) -> np.ndarray:
    """Canonical module-map representative of a multiplicity block matrix."""
    p = dom.p
    rep = fpla.zeros(canonical_module(cod).dim, canonical_module(dom).dim)
    moff_d, moff_c = module_offsets(dom), module_offsets(cod)
    boff_d, boff_c = mult_offsets(dom), mult_offsets(cod)
    for s in range(1, p):
        ca, cb = dom.mults[s - 1], cod.mults[s - 1]
        if ca == 0 or cb == 0:
            continue
        lam = blocks[boff_c[s - 1]:boff_c[s - 1] + cb,
                     boff_d[s - 1]:boff_d[s - 1] + ca]
        rep[moff_c[s - 1]:moff_c[s - 1] + cb * s,
            moff_d[s - 1]:moff_d[s - 1] + ca * s] = fpla.kron(
                lam, fpla.identity(s), p)
    return rep


# ---------------------------------------------------------------------------
# hom spaces and negligibles


@dataclass
class VerMorphism:
    """Morphism of Ver_p held as a representative C_p-module map.

    Equality is equality modulo negligible morphisms.
    """

    dom: CpModule
    cod: CpModule
    mat: np.ndarray

    def __post_init__(self):
        self.mat = fpla.normalize(self.mat, self.dom.p)
        if self.mat.shape != (self.cod.dim, self.dom.dim):
            raise ValueError("representative has the wrong shape")
        left = fpla.matmul(self.mat, self.dom.x, self.dom.p)
        right = fpla.matmul(self.cod.x, self.mat, self.dom.p)
        if not np.array_equal(left, right):
            raise ValueError("representative does not commute with the x-action")

    @property
    def p(self) -> int:
        return self.dom.p

    def compose(self, other: "VerMorphism") -> "VerMorphism":
        """self ∘ other."""
        return VerMorphism(other.dom, self.cod,
                           fpla.matmul(self.mat, other.mat, self.p))

    def is_negligible(self) -> bool:
        return is_negligible(self)

    def equals(self, other: "VerMorphism") -> bool:
        diff = VerMorphism(self.dom, self.cod, (self.mat - other.mat) % self.p)
        return diff.is_negligible()


def rep_hom_basis(m: CpModule, n: CpModule) -> list[np.ndarray]:
    """Basis of Hom_{Rep C_p}(m, n): solve F x_m = x_n F."""
    p = m.p
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    left = fpla.kron(fpla.identity(dn), m.x.T.copy(), p)
    right = fpla.kron(n.x, fpla.identity(dm), p)
    ker = fpla.kernel_basis((left - right) % p, p)
    return [ker[:, j].reshape(dn, dm).copy() for j in range(ker.shape[1])]


def trace_pairing(f: np.ndarray, g: np.ndarray, p: int) -> int:
    """trace(g ∘ f) mod p for f: M -> N, g: N -> M."""
    return int(np.trace(fpla.matmul(g, f, p)) % p)


def is_negligible(f: VerMorphism) -> bool:
    """f is negligible iff trace(g ∘ f) = 0 for all g in Hom(cod, dom)."""
    for g in rep_hom_basis(f.cod, f.dom):
        if trace_pairing(f.mat, g, f.p) != 0:
            return False
    return True


def hom_basis_ver(m: CpModule, n: CpModule) -> list[VerMorphism]:
    """Coset representatives of a basis of Hom_{Ver_p}(m, n).

    Computes Hom in Rep C_p and quotients by the radical of the trace
    pairing against the reverse hom-space.
    """
    if m.p != n.p:
        raise ValueError("modules live over different primes")
    p = m.p
    fs = rep_hom_basis(m, n)
    gs = rep_hom_basis(n, m)
    if not fs or not gs:
        return []
    gram = fpla.normalize(
        [[trace_pairing(f, g, p) for f in fs] for g in gs], p)
    _, pivots = fpla.rref(gram, p)
    return [VerMorphism(m, n, fs[int(j)]) for j in pivots]


# ---------------------------------------------------------------------------
# symmetric and divided powers via multiplicity-space S_n actions


def adjacent_swap_matrix(dims: list[int], i: int) -> np.ndarray:
    """Permutation matrix swapping tensor factors i and i+1 (0-based)."""
    total = 1
    for d in dims:
        total *= d
    perm = np.arange(total)
    shape = tuple(dims)
    idx = np.unravel_index(perm, shape)
    swapped = list(idx)
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
    new = np.ravel_multi_index(tuple(swapped), shape)
    mat = fpla.zeros(total, total)
    mat[new, perm] = 1
    return mat


def tensor_power_x(x: np.ndarray, p: int, n: int) -> np.ndarray:
    """Action matrix of the n-th tensor power (x acts slotwise)."""
    d = x.shape[0]
    check_size(max(d, 1) ** n if n else 1)
    if n == 0:
        return fpla.zeros(1, 1)
    out = x.copy()
    dim = d
    for _ in range(n - 1):
        out = (fpla.kron(out, fpla.identity(d), p)
               + fpla.kron(fpla.identity(dim), x, p)) % p
        dim *= d
    return out


def tensor_power_module(obj: VerObject, n: int) -> CpModule:
    return CpModule(obj.p, tensor_power_x(canonical_module(obj).x, obj.p, n))


@dataclass
class SymPowerData:
    power: VerObject
    tensor_power: VerObject
    projection_blocks: np.ndarray     # tensor_power -> power
    invariants: VerObject
    inclusion_blocks: np.ndarray      # invariants -> tensor_power
    splitting: Splitting              # of the presenting tensor-power module


def symmetric_power_data(obj: VerObject, n: int) -> SymPowerData:
    return symmetric_power_data_raw(canonical_module(obj).x, obj.p, n)


def symmetric_power_data_raw(x: np.ndarray, p: int, n: int) -> SymPowerData:
    """Coinvariants and invariants of the S_n action on the n-th tensor power.

    The braided action is realized by plain vector swaps on the presenting
    module; adjacent transpositions generate S_n, so coinvariants quotient
    by the span of (σ - id) over the adjacent swaps and invariants take the
    joint kernel.  Everything is read off the multiplicity spaces of the
    power, so projective junk in the presentation never contributes.
    """
    unit = VerObject(p, (1,) + (0,) * (p - 2))
    if n == 0:
        ident = fpla.identity(1)
        split = split_raw(fpla.zeros(1, 1), p)
        return SymPowerData(unit, unit, ident, unit, ident.copy(), split)
    power_x = tensor_power_x(x, p, n)
    split = split_raw(power_x, p)
    tp = split.obj
    if n == 1:
        ident = fpla.identity(tp.total_mult)
        return SymPowerData(tp, tp, ident, tp, ident.copy(), split)

    base_dim = x.shape[0]
    dims = [base_dim] * n
    diffs = []
    for i in range(n - 1):
        swap = adjacent_swap_matrix(dims, i)
        blocks = extract_blocks(
            fpla.matmul(fpla.matmul(split.prj, swap, p), split.emb, p), tp, tp)
        diffs.append((blocks - fpla.identity(tp.total_mult)) % p)

    power_mults = []
    inv_mults = []
    boff = mult_offsets(tp)
    proj = fpla.zeros(tp.total_mult, tp.total_mult)  # oversized; trimmed later
    incl = fpla.zeros(tp.total_mult, tp.total_mult)
    prow = 0
    icol = 0
    for s in range(1, p):
        c = tp.mults[s - 1]
        sl = slice(boff[s - 1], boff[s - 1] + c)
        if c == 0:
            power_mults.append(0)
            inv_mults.append(0)
            continue
        cols = np.hstack([d[sl, sl] for d in diffs])
        q, _ = fpla.quotient_maps(cols, p)
        power_mults.append(q.shape[0])
        proj[prow:prow + q.shape[0], sl] = q
        prow += q.shape[0]
        stacked = np.vstack([d[sl, sl] for d in diffs])
        kb = fpla.kernel_basis(stacked, p)
        inv_mults.append(kb.shape[1])
        incl[sl, icol:icol + kb.shape[1]] = kb
        icol += kb.shape[1]
    power = VerObject(p, tuple(power_mults))
    invariants = VerObject(p, tuple(inv_mults))
    return SymPowerData(power, tp, proj[:prow, :].copy(),
                        invariants, incl[:, :icol].copy(), split)


def sym_power_ver(obj: VerObject, n: int) -> VerObject:
    """n-th symmetric power in Ver_p (S_n-coinvariants of the tensor power)."""
    return symmetric_power_data(obj, n).power


def divided_power_ver(obj: VerObject, n: int) -> tuple[VerObject, VerMorphism]:
    """n-th divided power Γ^n (S_n-invariants), with its inclusion.

    The inclusion is returned as a module map into the honest n-fold tensor
    power presentation of obj.
    """
    data = symmetric_power_data(obj, n)
    module = tensor_power_module(obj, n)
    rep = materialize_blocks(data.inclusion_blocks, data.invariants, data.tensor_power)
    into_big = fpla.matmul(data.splitting.emb, rep, obj.p)
    return data.invariants, VerMorphism(
        canonical_module(data.invariants), module, into_big)


def coequalizer_ver(fs: list[VerMorphism]) -> tuple[VerObject, VerMorphism]:
    """Coequalizer of a parallel family, with projection onto it.

    Computed as the cokernel, on multiplicity spaces, of the stacked
    differences f_i - f_1; semisimplicity makes the projection split.
    """
    if not fs:
        raise ValueError("need at least one morphism")
    first = fs[0]
    p = first.p
    for f in fs[1:]:
        if f.dom.dim != first.dom.dim or f.cod.dim != first.cod.dim:
            raise ValueError("morphisms are not parallel")
        if not np.array_equal(f.dom.x, first.dom.x) or not np.array_equal(f.cod.x, first.cod.x):
            raise ValueError("morphisms are not parallel")
    split_d = semisimple_splitting(first.dom)
    split_c = semisimple_splitting(first.cod)
    dom_obj, cod_obj = split_d.obj, split_c.obj
    diff_blocks = []
    for f in fs[1:]:
        diff = (f.mat - first.mat) % p
        rep = fpla.matmul(fpla.matmul(split_c.prj, diff, p), split_d.emb, p)
        diff_blocks.append(extract_blocks(rep, dom_obj, cod_obj))

    boff = mult_offsets(cod_obj)
    out_mults = []
    q_full = fpla.zeros(cod_obj.total_mult, cod_obj.total_mult)
    row = 0
    for s in range(1, p):
        c = cod_obj.mults[s - 1]
        sl = slice(boff[s - 1], boff[s - 1] + c)
        if c == 0:
            out_mults.append(0)
            continue
        if diff_blocks:
            doms = mult_offsets(dom_obj)
            dsl = slice(doms[s - 1], doms[s - 1] + dom_obj.mults[s - 1])
            cols = np.hstack([b[sl, dsl] for b in diff_blocks])
        else:
            cols = fpla.zeros(c, 0)
        q, _ = fpla.quotient_maps(cols, p)
        out_mults.append(q.shape[0])
        q_full[row:row + q.shape[0], sl] = q
        row += q.shape[0]
    result = VerObject(p, tuple(out_mults))
    rep = materialize_blocks(q_full[:row, :], cod_obj, result)
    proj = fpla.matmul(rep, split_c.prj, p)
    return result, VerMorphism(first.cod, canonical_module(result), proj)
