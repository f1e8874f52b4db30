"""Degree-truncated graded commutative algebras over a category backend.

A GradedAlgebra carries component objects A_0..A_N with A_0 the unit, and
one multiplication morphism per degree pair (i, j) with i + j <= N.  The
axioms (associativity, braided commutativity, strict unit laws) are checked
as exact matrix identities on construction.

Free symmetric algebras store the projections from tensor powers so that
induced maps (images, quotients, twists, coactions) can be pushed through
the chosen presentations without ever re-splitting a quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .backends import Backend, Mor
from .guard import check_size


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Ordered compositions of total into `parts` nonnegative parts, lex order."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


@dataclass
class GradedAlgebra:
    backend: Backend
    N: int
    components: list
    mult: dict[tuple[int, int], Mor]
    # optional presentation data, filled in by the constructors that have it
    generator: object = None
    sym_projs: list[Mor] | None = None
    embeddings: list[Mor] | None = None        # subalgebra monos into an ambient algebra
    summands: list[list[tuple[int, int]]] | None = None   # tensor-product bookkeeping
    injections: list[list[Mor]] | None = None
    projections: list[list[Mor]] | None = None
    layers: dict[tuple[int, int], object] | None = None   # (filtration level, degree)

    def component(self, d: int):
        return self.components[d]


@dataclass
class GradedIdeal:
    algebra: GradedAlgebra
    monos: list[Mor]       # monos[d]: J_d -> A_d

    def degree_object(self, d: int):
        return self.monos[d].dom


@dataclass
class GradedAlgebraMap:
    dom: GradedAlgebra
    cod: GradedAlgebra
    maps: list[Mor]


def validate_algebra(alg: GradedAlgebra) -> None:
    """Exact checks of unit laws, associativity, and braided commutativity."""
    be = alg.backend
    unit = be.unit()
    if not be.eq_obj(alg.components[0], unit):
        raise AssertionError("degree-0 component is not the unit object")
    for (i, j), m in alg.mult.items():
        be.assert_valid_mor(m)
        if i == 0 and not be.eq_mor(m, be.id_mor(alg.components[j])):
            raise AssertionError(f"left unit law fails at degree {j}")
        if j == 0 and not be.eq_mor(m, be.id_mor(alg.components[i])):
            raise AssertionError(f"right unit law fails at degree {i}")
    for i in range(alg.N + 1):
        for j in range(alg.N + 1 - i):
            braid = be.braiding(alg.components[i], alg.components[j])
            lhs = be.compose(alg.mult[(j, i)], braid)
            if not be.eq_mor(lhs, alg.mult[(i, j)]):
                raise AssertionError(f"commutativity fails at ({i},{j})")
            for k in range(alg.N + 1 - i - j):
                left = be.compose(
                    alg.mult[(i + j, k)],
                    be.tensor_mor(alg.mult[(i, j)], be.id_mor(alg.components[k])))
                right = be.compose(
                    alg.mult[(i, j + k)],
                    be.tensor_mor(be.id_mor(alg.components[i]), alg.mult[(j, k)]))
                if not be.eq_mor(left, right):
                    raise AssertionError(f"associativity fails at ({i},{j},{k})")


def validate_algebra_map(fmap: GradedAlgebraMap) -> None:
    be = fmap.dom.backend
    if not be.eq_mor(fmap.maps[0], be.id_mor(be.unit())):
        raise AssertionError("algebra map does not preserve the unit")
    n = min(fmap.dom.N, fmap.cod.N)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            lhs = be.compose(fmap.maps[i + j], fmap.dom.mult[(i, j)])
            rhs = be.compose(fmap.cod.mult[(i, j)],
                             be.tensor_mor(fmap.maps[i], fmap.maps[j]))
            if not be.eq_mor(lhs, rhs):
                raise AssertionError(f"algebra map fails multiplicativity at ({i},{j})")


def hilbert(alg: GradedAlgebra) -> list:
    """Per-degree iso-class descriptors."""
    return [alg.backend.iso_class(c) for c in alg.components]


def dims(alg: GradedAlgebra) -> list[int]:
    return [alg.backend.dim(c) for c in alg.components]


# ---------------------------------------------------------------------------
# free symmetric algebras


def tensor_power_mor(be: Backend, f: Mor, d: int) -> Mor:
    if d == 0:
        return be.id_mor(be.unit())
    return be.tensor_mor_list([f] * d)


def free_symmetric(be: Backend, x, n: int) -> GradedAlgebra:
    """Degree-truncated symmetric algebra S(x) with stored projections."""
    pairs = [be.sym_power(x, d) for d in range(n + 1)]
    components = [obj for obj, _ in pairs]
    projs = [proj for _, proj in pairs]
    sections = [be.section_of_epi(pr) for pr in projs]
    mult = {}
    for i in range(n + 1):
        for j in range(n + 1 - i):
            concat = be.tensor_power_concat(x, i, j)
            m = be.compose(projs[i + j],
                           be.compose(concat, be.tensor_mor(sections[i], sections[j])))
            lhs = be.compose(m, be.tensor_mor(projs[i], projs[j]))
            rhs = be.compose(projs[i + j], concat)
            if not be.eq_mor(lhs, rhs):
                raise AssertionError(f"symmetric multiplication ill-defined at ({i},{j})")
            mult[(i, j)] = m
    alg = GradedAlgebra(be, n, components, mult, generator=x, sym_projs=projs)
    validate_algebra(alg)
    return alg


def free_symmetric_map(f: Mor, dom_alg: GradedAlgebra,
                       cod_alg: GradedAlgebra) -> GradedAlgebraMap:
    """The algebra map S(f) between free symmetric algebras, degreewise."""
    be = dom_alg.backend
    n = min(dom_alg.N, cod_alg.N)
    maps = []
    for d in range(n + 1):
        power = tensor_power_mor(be, f, d)
        sec = be.section_of_epi(dom_alg.sym_projs[d])
        m = be.compose(cod_alg.sym_projs[d], be.compose(power, sec))
        lhs = be.compose(m, dom_alg.sym_projs[d])
        rhs = be.compose(cod_alg.sym_projs[d], power)
        if not be.eq_mor(lhs, rhs):
            raise AssertionError(f"induced symmetric-power map ill-defined at degree {d}")
        maps.append(m)
    fmap = GradedAlgebraMap(dom_alg, cod_alg, maps)
    validate_algebra_map(fmap)
    return fmap


# ---------------------------------------------------------------------------
# subalgebras, ideals, quotients


def _subalgebra_from_monos(ambient: GradedAlgebra, monos: list[Mor]) -> GradedAlgebra:
    """Induce an algebra structure on per-degree subobjects (must be closed)."""
    be = ambient.backend
    unit = be.unit()
    components = [unit] + [m.dom for m in monos[1:]]
    fixed = [be.id_mor(unit)] + list(monos[1:])
    mult = {}
    for i in range(ambient.N + 1):
        for j in range(ambient.N + 1 - i):
            big = be.compose(ambient.mult[(i, j)], be.tensor_mor(fixed[i], fixed[j]))
            mult[(i, j)] = be.factor_through_mono(big, fixed[i + j])
    alg = GradedAlgebra(be, ambient.N, components, mult, embeddings=fixed)
    validate_algebra(alg)
    return alg


def _normalize_unit_mono(be: Backend, obj, mono: Mor) -> Mor:
    """Replace a degree-0 sub/image object by the unit with the same span."""
    if be.space_dim(obj) != 1:
        raise AssertionError("degree-0 part of a subalgebra must be a line")
    return be.mor(be.unit(), mono.cod, mono.mat)


def algebra_map_image(fmap: GradedAlgebraMap) -> GradedAlgebra:
    """The image of a graded algebra map, as a subalgebra of the codomain."""
    validate_algebra_map(fmap)
    be = fmap.dom.backend
    monos = []
    for d, f in enumerate(fmap.maps):
        obj, mono = be.image(f)
        if d == 0:
            mono = _normalize_unit_mono(be, obj, mono)
        monos.append(mono)
    return _subalgebra_from_monos(fmap.cod, monos)


def nil_ideal(alg: GradedAlgebra) -> GradedIdeal:
    """The ideal generated by the per-degree nil parts (joint kernels to 1)."""
    be = alg.backend
    monos = []
    for d, comp in enumerate(alg.components):
        if d == 0:
            zero = be.zero_obj()
            monos.append(be.mor(zero, comp, np.zeros((be.space_dim(comp), 0))))
        else:
            _, mono = be.nil_part(comp)
            monos.append(mono)
    changed = True
    while changed:
        changed = False
        for i in range(alg.N + 1):
            for j in range(alg.N + 1 - i):
                d = i + j
                gens = [monos[d]]
                gens.append(be.compose(alg.mult[(i, j)], be.tensor_mor(
                    monos[i], be.id_mor(alg.components[j]))))
                gens.append(be.compose(alg.mult[(i, j)], be.tensor_mor(
                    be.id_mor(alg.components[i]), monos[j])))
                obj, mono = be.sub_from_map_images(alg.components[d], gens)
                if be.space_dim(obj) != be.space_dim(monos[d].dom):
                    monos[d] = mono
                    changed = True
    return GradedIdeal(alg, monos)


def is_ideal(alg: GradedAlgebra, ideal: GradedIdeal) -> bool:
    be = alg.backend
    for i in range(alg.N + 1):
        for j in range(alg.N + 1 - i):
            left = be.compose(alg.mult[(i, j)], be.tensor_mor(
                ideal.monos[i], be.id_mor(alg.components[j])))
            right = be.compose(alg.mult[(i, j)], be.tensor_mor(
                be.id_mor(alg.components[i]), ideal.monos[j]))
            for cand in (left, right):
                img_obj, img = be.image(cand)
                if not be.span_contains(ideal.monos[i + j], img):
                    return False
    return True


def body(alg: GradedAlgebra, ideal: GradedIdeal | None = None) -> GradedAlgebra:
    """The quotient algebra A / J by the nil ideal (or a given ideal)."""
    be = alg.backend
    if ideal is None:
        ideal = nil_ideal(alg)
    quots = []
    eps = []
    for d in range(alg.N + 1):
        obj, q = be.quotient_by(alg.components[d], ideal.monos[d])
        quots.append(obj)
        eps.append(q)
    if not be.eq_obj(quots[0], be.unit()):
        quots[0] = be.unit()
        eps[0] = be.mor(alg.components[0], be.unit(), eps[0].mat)
    mult = {}
    for i in range(alg.N + 1):
        for j in range(alg.N + 1 - i):
            rhs = be.compose(eps[i + j], alg.mult[(i, j)])
            mult[(i, j)] = be.factor_through_epi(rhs, be.tensor_mor(eps[i], eps[j]))
    out = GradedAlgebra(be, alg.N, quots, mult, projections=[eps])
    validate_algebra(out)
    return out


def invariant_subalgebra(alg: GradedAlgebra) -> GradedAlgebra:
    """The unit-isotypic part Hom(1, A_d) realized as a subalgebra."""
    be = alg.backend
    monos = []
    for d, comp in enumerate(alg.components):
        _, mono = be.unit_isotypic(comp)
        if d == 0:
            mono = _normalize_unit_mono(be, mono.dom, mono)
        monos.append(mono)
    return _subalgebra_from_monos(alg, monos)


# ---------------------------------------------------------------------------
# associated graded of an ideal filtration


def ideal_powers(alg: GradedAlgebra, ideal: GradedIdeal) -> list[list[Mor]]:
    """Monos of J^k per degree, k = 0 (the whole algebra) until J^k = 0."""
    be = alg.backend
    full = [be.id_mor(c) for c in alg.components]
    powers = [full, list(ideal.monos)]
    while any(be.space_dim(m.dom) > 0 for m in powers[-1]):
        prev = powers[-1]
        nxt = []
        for d in range(alg.N + 1):
            gens = []
            for i in range(d + 1):
                j = d - i
                gens.append(be.compose(alg.mult[(i, j)],
                                       be.tensor_mor(prev[i], ideal.monos[j])))
            obj, mono = be.sub_from_map_images(alg.components[d], gens)
            if not be.span_contains(prev[d], mono):
                raise AssertionError("ideal powers are not decreasing")
            nxt.append(mono)
        powers.append(nxt)
    return powers


def gr_by_filtration(alg: GradedAlgebra, ideal: GradedIdeal) -> GradedAlgebra:
    """Associated graded Σ_k J^k/J^{k+1}, flattened back to one grading.

    Degree-d component is the direct sum over filtration levels k of the
    layer (J^k/J^{k+1})_d, with the multiplication induced from A.
    """
    be = alg.backend
    powers = ideal_powers(alg, ideal)
    kmax = len(powers) - 2          # powers[kmax+1] is zero everywhere
    layer_objs: dict[tuple[int, int], object] = {}
    layer_projs: dict[tuple[int, int], Mor] = {}
    for k in range(kmax + 1):
        for d in range(alg.N + 1):
            incl = be.factor_through_mono(powers[k + 1][d], powers[k][d])
            obj, q = be.quotient_by(powers[k][d].dom, incl)
            layer_objs[(k, d)] = obj
            layer_projs[(k, d)] = q

    components = []
    injs_all, projs_all = [], []
    for d in range(alg.N + 1):
        objs = [layer_objs[(k, d)] for k in range(kmax + 1)]
        total, injs, projs = be.direct_sum(objs)
        components.append(total)
        injs_all.append(injs)
        projs_all.append(projs)
        if be.dim(total) != be.dim(alg.components[d]):
            raise AssertionError("gr does not preserve per-degree dimension")

    mult = {}
    for d in range(alg.N + 1):
        for e in range(alg.N + 1 - d):
            total_mor = be.zero_mor(
                be.tensor_obj(components[d], components[e]), components[d + e])
            for k in range(kmax + 1):
                for k2 in range(kmax + 1):
                    restricted = be.compose(alg.mult[(d, e)], be.tensor_mor(
                        powers[k][d], powers[k2][e]))
                    if k + k2 > kmax:
                        if not be.is_zero_mor(restricted):
                            raise AssertionError("product escapes the filtration")
                        continue
                    into = be.factor_through_mono(restricted, powers[k + k2][d + e])
                    lay = be.compose(layer_projs[(k + k2, d + e)], into)
                    dom_epi = be.tensor_mor(layer_projs[(k, d)], layer_projs[(k2, e)])
                    induced = be.factor_through_epi(lay, dom_epi)
                    piece = be.compose(
                        be.compose(injs_all[d + e][k + k2], induced),
                        be.tensor_mor(projs_all[d][k], projs_all[e][k2]))
                    total_mor = be.add(total_mor, piece)
            mult[(d, e)] = total_mor
    if not be.eq_obj(components[0], be.unit()):
        raise AssertionError("gr lost the unit component")
    out = GradedAlgebra(be, alg.N, components, mult,
                        layers={k_d: obj for k_d, obj in layer_objs.items()})
    validate_algebra(out)
    return out


# ---------------------------------------------------------------------------
# Frobenius twist


def frobenius_twist(alg: GradedAlgebra) -> GradedAlgebra:
    """The subalgebra of p-th powers: image of the braided S_p-invariants
    of ⊕ A_{d_1}⊗...⊗A_{d_p} under p-fold multiplication, per degree."""
    be = alg.backend
    p = be.p
    monos = []
    for d in range(alg.N + 1):
        comps = compositions(d, p)
        w_objs = []
        for c in comps:
            size = 1
            for part in c:
                size *= max(be.dim(alg.components[part]), 1)
            check_size(size)
            w_objs.append(be.tensor_obj_list([alg.components[part] for part in c]))
        big, injs, projs = be.direct_sum(w_objs)
        index = {c: t for t, c in enumerate(comps)}

        diffs = []
        for t in range(p - 1):
            action = be.zero_mor(big, big)
            for c in comps:
                target = list(c)
                target[t], target[t + 1] = target[t + 1], target[t]
                target = tuple(target)
                factors = []
                for k in range(p):
                    if k == t:
                        factors.append(be.braiding(alg.components[c[t]],
                                                   alg.components[c[t + 1]]))
                    elif k == t + 1:
                        continue
                    else:
                        factors.append(be.id_mor(alg.components[c[k]]))
                piece = be.tensor_mor_list(factors)
                action = be.add(action, be.compose(
                    be.compose(injs[index[target]], piece), projs[index[c]]))
            diffs.append(be.sub(action, be.id_mor(big)))
        inv_obj, inv_mono = be.joint_kernel(diffs) if diffs else (big, be.id_mor(big))

        mu = be.zero_mor(big, alg.components[d])
        for c in comps:
            itermult = be.id_mor(alg.components[c[0]])
            acc = c[0]
            for part in c[1:]:
                itermult = be.compose(alg.mult[(acc, part)],
                                      be.tensor_mor(itermult, be.id_mor(alg.components[part])))
                acc += part
            mu = be.add(mu, be.compose(itermult, projs[index[c]]))

        obj, mono = be.image(be.compose(mu, inv_mono))
        if d == 0:
            mono = _normalize_unit_mono(be, obj, mono)
        monos.append(mono)
    return _subalgebra_from_monos(alg, monos)


# ---------------------------------------------------------------------------
# tensor product of algebras


def tensor_algebras(a: GradedAlgebra, b: GradedAlgebra) -> GradedAlgebra:
    """A ⊗ B with the braided product (a⊗b)(a'⊗b') = a·β(b,a')·b'."""
    be = a.backend
    if b.backend is not be and (b.backend.name, b.backend.p) != (be.name, be.p):
        raise ValueError("backend mismatch")
    if a.N != b.N:
        raise ValueError("truncation mismatch")
    n = a.N
    summands, components, injs_all, projs_all = [], [], [], []
    for d in range(n + 1):
        idx = [(i, d - i) for i in range(d + 1)]
        objs = [be.tensor_obj(a.components[i], b.components[j]) for i, j in idx]
        total, injs, projs = be.direct_sum(objs)
        summands.append(idx)
        components.append(total)
        injs_all.append(injs)
        projs_all.append(projs)

    mult = {}
    for d in range(n + 1):
        for e in range(n + 1 - d):
            dom = be.tensor_obj(components[d], components[e])
            total_mor = be.zero_mor(dom, components[d + e])
            for s1, (i, j) in enumerate(summands[d]):
                for s2, (k, l) in enumerate(summands[e]):
                    beta = be.tensor_mor(
                        be.id_mor(a.components[i]),
                        be.tensor_mor(be.braiding(b.components[j], a.components[k]),
                                      be.id_mor(b.components[l])))
                    mm = be.tensor_mor(a.mult[(i, k)], b.mult[(j, l)])
                    tgt = summands[d + e].index((i + k, j + l))
                    piece = be.compose(
                        injs_all[d + e][tgt],
                        be.compose(mm, be.compose(beta, be.tensor_mor(
                            projs_all[d][s1], projs_all[e][s2]))))
                    total_mor = be.add(total_mor, piece)
            mult[(d, e)] = total_mor
    out = GradedAlgebra(be, n, components, mult, summands=summands,
                        injections=injs_all, projections=projs_all)
    validate_algebra(out)
    return out
