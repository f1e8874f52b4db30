"""JSON forms for objects, morphisms, problems, algebras, and reports.

Every document round-trips to an equal in-memory value.  Ver_p objects
serialize by their multiplicity vector and are rebuilt on the canonical
presentation, so only morphisms between canonically presented objects are
serializable (which is all the external interfaces ever need).
"""

from __future__ import annotations

import numpy as np

from . import fpla, verp
from .backends import Backend, Mor, V4Obj, VecObj, VerpObj, get_backend
from .gradedalg import GradedAlgebra, validate_algebra
from .homogquot import AdditiveQuotientProblem, QuotientReport


def _require(doc: dict, field: str):
    if field not in doc:
        raise ValueError(f"missing field {field!r}")
    return doc[field]


def obj_to_json(be: Backend, obj) -> dict:
    if be.name == "vec":
        return {"backend": "vec", "p": be.p, "dim": obj.dim}
    if be.name == "verp":
        mults = be.iso_class(obj)
        canon = be.obj_from_mults(mults)
        if not np.array_equal(canon.x, obj.x):
            raise ValueError("only canonically presented verp objects serialize")
        return {"backend": "verp", "p": be.p, "mults": [int(m) for m in mults]}
    return {"backend": "ver4plus", "dim": obj.dim,
            "x": fpla.FpMatrix(2, obj.x).to_json()}


def obj_from_json(doc: dict):
    name = _require(doc, "backend")
    if name == "vec":
        be = get_backend("vec", int(_require(doc, "p")))
        return be, VecObj(int(_require(doc, "dim")))
    if name == "verp":
        be = get_backend("verp", int(_require(doc, "p")))
        return be, be.obj_from_mults(_require(doc, "mults"))
    if name == "ver4plus":
        be = get_backend("ver4plus", 2)
        x = fpla.FpMatrix.from_json(_require(doc, "x"))
        return be, V4Obj(int(_require(doc, "dim")), x.mat)
    raise ValueError(f"unknown backend {name!r}")


def mor_to_json(be: Backend, f: Mor) -> dict:
    return {
        "backend": be.name,
        "p": be.p,
        "dom": obj_to_json(be, f.dom),
        "cod": obj_to_json(be, f.cod),
        "mat": fpla.FpMatrix(be.p, f.mat).to_json(),
    }


def mor_from_json(doc: dict) -> tuple[Backend, Mor]:
    be, dom = obj_from_json(_require(doc, "dom"))
    _, cod = obj_from_json(_require(doc, "cod"))
    mat = fpla.FpMatrix.from_json(_require(doc, "mat"))
    if mat.p != be.p:
        raise ValueError("field 'mat' has a different prime than the objects")
    return be, be.mor(dom, cod, mat.mat)


def cpmodule_to_json(m: verp.CpModule) -> dict:
    return {"dim": m.dim, "x": fpla.FpMatrix(m.p, m.x).to_json()}


def cpmodule_from_json(doc: dict) -> verp.CpModule:
    x = fpla.FpMatrix.from_json(_require(doc, "x"))
    if int(_require(doc, "dim")) != x.mat.shape[0]:
        raise ValueError("field 'dim' disagrees with the matrix shape")
    return verp.CpModule(x.p, x.mat)


def problem_to_json(prob: AdditiveQuotientProblem) -> dict:
    return {
        "backend": prob.backend.name,
        "p": prob.backend.p,
        "iota": mor_to_json(prob.backend, prob.iota),
        "N": prob.N,
    }


def problem_from_json(doc: dict) -> AdditiveQuotientProblem:
    be, iota = mor_from_json(_require(doc, "iota"))
    if be.name != _require(doc, "backend"):
        raise ValueError("field 'backend' disagrees with the morphism payload")
    n = int(_require(doc, "N"))
    if n < 0:
        raise ValueError("field 'N' must be nonnegative")
    return AdditiveQuotientProblem(be, iota, n)


def iso_to_json(be: Backend, iso) -> object:
    if be.name == "vec":
        return int(iso[0])
    return [int(v) for v in iso]


def hilbert_to_json(be: Backend, hil: list) -> list:
    return [iso_to_json(be, h) for h in hil]


def report_to_json(be: Backend, rep: QuotientReport) -> dict:
    return {
        "r_hilbert": hilbert_to_json(be, rep.r_hilbert),
        "b_hilbert": hilbert_to_json(be, rep.b_hilbert),
        "gr_ok": list(rep.gr_ok),
        "can_iso": list(rep.can_iso),
        "can_surj": list(rep.can_surj),
        "b_eq_r": list(rep.b_eq_r),
        "complement": fpla.FpMatrix(be.p, rep.complement).to_json(),
    }


def algebra_to_json(alg: GradedAlgebra) -> dict:
    be = alg.backend
    return {
        "backend": be.name,
        "p": be.p,
        "N": alg.N,
        "components": [obj_to_json(be, c) for c in alg.components],
        "mult": {f"{i},{j}": fpla.FpMatrix(be.p, m.mat).to_json()
                 for (i, j), m in sorted(alg.mult.items())},
    }


def algebra_from_json(doc: dict, validate: bool = True) -> GradedAlgebra:
    name = _require(doc, "backend")
    be = get_backend(name, int(_require(doc, "p")))
    n = int(_require(doc, "N"))
    components = [obj_from_json(c)[1] for c in _require(doc, "components")]
    mult = {}
    for key, mat_doc in _require(doc, "mult").items():
        i, j = (int(v) for v in key.split(","))
        mat = fpla.FpMatrix.from_json(mat_doc)
        mult[(i, j)] = be.mor(be.tensor_obj(components[i], components[j]),
                              components[i + j], mat.mat)
    alg = GradedAlgebra(be, n, components, mult)
    if validate:
        validate_algebra(alg)
    return alg
