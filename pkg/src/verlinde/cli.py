"""Batch command-line front end: JSON in, JSON reports and tables out.

Exit codes: 0 success; 1 failed verification criteria; 2 validation errors
(bad flags, malformed JSON, non-prime p, ...); 3 size-guard refusals.
Output is byte-for-byte deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.metadata import PackageNotFoundError, version as pkg_version
from pathlib import Path

import numpy as np

from . import fpla, gradedalg, homogquot, serialize, verp
from .acceptance import format_table, run_acceptance
from .backends import Backend, VecObj, get_backend
from .guard import SizeGuardError


def tool_version() -> str:
    try:
        return pkg_version("verlinde")
    except PackageNotFoundError:    # running from a source tree
        return "0.1.0"


class CliError(Exception):
    """Validation failure; maps to exit code 2 with the message on stderr."""


def _parse_summands(be: Backend, text: str) -> list:
    parts = [t.strip() for t in text.split("+")]
    objs = []
    for part in parts:
        objs.append(_parse_atom(be, part))
    return objs


def _parse_atom(be: Backend, text: str):
    if be.name == "verp":
        if not (text.startswith("L") and text[1:].isdigit()):
            raise CliError(f"object {text!r}: verp objects are written L1..L{be.p - 1}")
        k = int(text[1:])
        if not 1 <= k <= be.p - 1:
            raise CliError(f"object {text!r}: index must lie in 1..{be.p - 1}")
        mults = [0] * (be.p - 1)
        mults[k - 1] = 1
        return be.obj_from_mults(mults)
    if be.name == "ver4plus":
        if text == "1":
            return be.unit()
        if text == "P":
            from .ver4plus import indecomposable_p
            return indecomposable_p()
        raise CliError(f"object {text!r}: ver4plus objects are written 1 or P")
    if text.startswith("k^") and text[2:].isdigit():
        return VecObj(int(text[2:]))
    if text == "k":
        return VecObj(1)
    if text.isdigit():
        return VecObj(int(text))
    raise CliError(f"object {text!r}: vec objects are written k, k^d, or d")


def parse_object(be: Backend, text: str):
    """Shorthand ('L2', 'P+1', 'k^2') or inline JSON or a JSON file path."""
    text = text.strip()
    if text.startswith("{"):
        doc = _load_json_text(text)
        be2, obj = serialize.obj_from_json(doc)
        _check_backend(be, be2)
        return obj
    if text.endswith(".json") and Path(text).exists():
        be2, obj = serialize.obj_from_json(_load_json_file(text))
        _check_backend(be, be2)
        return obj
    objs = _parse_summands(be, text)
    if len(objs) == 1:
        return objs[0]
    total, _, _ = be.direct_sum(objs)
    return total


def _check_backend(be: Backend, be2: Backend) -> None:
    if (be.name, be.p) != (be2.name, be2.p):
        raise CliError(f"object backend {be2.name}/p={be2.p} does not match "
                       f"the requested {be.name}/p={be.p}")


def _load_json_text(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON: {exc}") from exc


def _load_json_file(path: str) -> dict:
    try:
        return _load_json_text(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _iota_from_shorthand(be: Backend, text: str):
    dom_txt, _, cod_txt = text.partition("->")
    if not cod_txt:
        raise CliError(f"iota {text!r}: expected 'DOM->COD', JSON, or a path")
    dom = parse_object(be, dom_txt)
    cod = parse_object(be, cod_txt)
    if be.name == "ver4plus" and dom_txt.strip() == "1" and cod_txt.strip() == "P":
        return be.mor(dom, cod, [[1], [0]])
    mat = _split_inclusion_matrix(be, dom_txt.strip(), cod_txt.strip())
    return be.mor(dom, cod, mat)


def _split_inclusion_matrix(be: Backend, dom_txt: str, cod_txt: str) -> np.ndarray:
    """Evident split inclusion matching the shorthand summands in order."""
    dom_parts = [t.strip() for t in dom_txt.split("+")]
    cod_parts = [t.strip() for t in cod_txt.split("+")]
    remaining = list(enumerate(cod_parts))
    targets = []
    for part in dom_parts:
        hit = next(((idx, lbl) for idx, lbl in remaining if lbl == part), None)
        if hit is None:
            raise CliError(f"iota: summand {part!r} of the domain does not "
                           f"appear (again) in the codomain {cod_txt!r}")
        remaining.remove(hit)
        targets.append(hit[0])
    dom_objs = [_parse_atom(be, t) for t in dom_parts]
    cod_objs = [_parse_atom(be, t) for t in cod_parts]
    cod_dims = [be.space_dim(o) for o in cod_objs]
    offsets = np.concatenate([[0], np.cumsum(cod_dims)])
    total = int(offsets[-1])
    cols = sum(be.space_dim(o) for o in dom_objs)
    mat = np.zeros((total, cols), dtype=np.int64)
    col = 0
    for part_idx, obj in enumerate(dom_objs):
        d = be.space_dim(obj)
        row = int(offsets[targets[part_idx]])
        mat[row:row + d, col:col + d] = np.eye(d, dtype=np.int64)
        col += d
    return mat


def _resolve_iota(be: Backend, text: str):
    text = text.strip()
    if text.startswith("{"):
        be2, mor = serialize.mor_from_json(_load_json_text(text))
        _check_backend(be, be2)
        return mor
    if "->" in text:
        return _iota_from_shorthand(be, text)
    be2, mor = serialize.mor_from_json(_load_json_file(text))
    _check_backend(be, be2)
    return mor


def _backend_from_args(args) -> Backend:
    name = getattr(args, "backend", "verp")
    p = getattr(args, "p", None)
    if name == "ver4plus":
        if p not in (None, 2):
            raise CliError("ver4plus forces p=2")
        p = 2
    if p is None:
        raise CliError("--p is required for this backend")
    if not fpla.is_prime(p):
        raise CliError(f"p={p} is not prime")
    return get_backend(name, p)


def _emit(args, document: dict, table: str | None = None) -> None:
    payload = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
    if table and getattr(args, "table", False):
        sys.stdout.write(table + "\n")
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _document(args, result: dict) -> dict:
    config = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "output", "table") and v is not None}
    return {
        "tool": {"name": "verlinde", "version": tool_version()},
        "config": config,
        "result": result,
    }


def _aligned(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
                     for r in rows)


# -- subcommands ----------------------------------------------------------------


def cmd_fuse(args):
    if not fpla.is_prime(args.p):
        raise CliError(f"p={args.p} is not prime")
    be = get_backend("verp", args.p)
    a = parse_object(be, args.a)
    b = parse_object(be, args.b)
    fused = be.tensor_obj(a, b)
    mults = list(be.iso_class(fused))
    rows = [["simple", "multiplicity"]] + [
        [f"L{s + 1}", str(m)] for s, m in enumerate(mults)]
    _emit(args, _document(args, {"mults": mults}), _aligned(rows))
    return 0


def cmd_jordan(args):
    if not fpla.is_prime(args.p):
        raise CliError(f"p={args.p} is not prime")
    doc = _load_json_file(args.input) if not args.input.strip().startswith("{") \
        else _load_json_text(args.input)
    try:
        module = serialize.cpmodule_from_json(doc)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if module.p != args.p:
        raise CliError("field 'x.p' disagrees with --p")
    typ = verp.jordan_type(module)
    rows = [["block size", "count"]] + [
        [str(s + 1), str(c)] for s, c in enumerate(typ.counts)]
    _emit(args, _document(args, {"counts": list(typ.counts), "dim": typ.dim}),
          _aligned(rows))
    return 0


def cmd_sympow(args):
    be = _backend_from_args(args)
    obj = parse_object(be, args.object)
    power, _ = be.sym_power(obj, args.n)
    result = {
        "iso_class": serialize.iso_to_json(be, be.iso_class(power)),
        "dim": be.dim(power),
    }
    _emit(args, _document(args, result))
    return 0


def cmd_symalg(args):
    be = _backend_from_args(args)
    obj = parse_object(be, args.object)
    alg = gradedalg.free_symmetric(be, obj, args.N)
    hil = gradedalg.hilbert(alg)
    rows = [["degree", "dim", "iso class"]] + [
        [str(d), str(gradedalg.dims(alg)[d]), str(serialize.iso_to_json(be, h))]
        for d, h in enumerate(hil)]
    result = {
        "hilbert": serialize.hilbert_to_json(be, hil),
        "dims": gradedalg.dims(alg),
        "algebra": serialize.algebra_to_json(alg),
    }
    _emit(args, _document(args, result), _aligned(rows))
    return 0


def cmd_frobtwist(args):
    be = _backend_from_args(args)
    obj = parse_object(be, args.object)
    alg = gradedalg.free_symmetric(be, obj, args.N)
    if args.body:
        alg = gradedalg.body(alg)
    twist = gradedalg.frobenius_twist(alg)
    result = {
        "hilbert": serialize.hilbert_to_json(be, gradedalg.hilbert(twist)),
        "dims": gradedalg.dims(twist),
        "body": bool(args.body),
    }
    _emit(args, _document(args, result))
    return 0


def cmd_nil(args):
    be = _backend_from_args(args)
    obj = parse_object(be, args.object)
    sub, _ = be.nil_part(obj)
    result = {
        "iso_class": serialize.iso_to_json(be, be.iso_class(sub)),
        "dim": be.dim(sub),
    }
    _emit(args, _document(args, result))
    return 0


def cmd_quotient(args):
    be = _backend_from_args(args)
    iota = _resolve_iota(be, args.iota)
    try:
        prob = homogquot.AdditiveQuotientProblem(be, iota, args.N)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    rep = homogquot.quotient_report(prob)
    result = serialize.report_to_json(be, rep)
    rows = [["degree", "gr_ok", "can_iso", "can_surj", "b_eq_r"]] + [
        [str(d), str(rep.gr_ok[d]), str(rep.can_iso[d]),
         str(rep.can_surj[d]), str(rep.b_eq_r[d])]
        for d in range(len(rep.gr_ok))]
    _emit(args, _document(args, result), _aligned(rows))
    return 0


def cmd_verify(args):
    results = run_acceptance(only=args.only)
    if not results:
        raise CliError(f"--only {args.only!r} matches no criterion tag or id")
    sys.stdout.write(format_table(results) + "\n")
    if args.output:
        doc = _document(args, {
            "criteria": [{"id": r.cid, "tag": r.tag, "ok": r.ok,
                          "detail": r.detail, "seconds": round(r.seconds, 3)}
                         for r in results],
            "passed": all(r.ok for r in results),
        })
        Path(args.output).write_text(
            json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n",
            encoding="utf-8")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Exact computations in Rep C_p, Ver_p, and Ver_4^+: "
                    "fusion, symmetric powers, graded algebras, Frobenius "
                    "twists, and additive-group quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, backend=True, n_flag=None):
        if backend:
            sp.add_argument("--backend", choices=["vec", "verp", "ver4plus"],
                            default="verp")
            sp.add_argument("--p", type=int, default=None,
                            help="prime (forced to 2 for ver4plus)")
        if n_flag:
            sp.add_argument(n_flag, type=int, required=True)
        sp.add_argument("--output", help="write the JSON document here")
        sp.add_argument("--table", action="store_true",
                        help="also print an aligned human-readable table")

    sp = sub.add_parser("fuse", help="tensor decomposition in Ver_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", required=True, help="object, e.g. L2 or L1+L3")
    sp.add_argument("--b", required=True)
    sp.add_argument("--output")
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_fuse)

    sp = sub.add_parser("jordan", help="Jordan type of a C_p-module")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--input", required=True,
                    help="CpModule JSON (inline or a file path)")
    sp.add_argument("--output")
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_jordan)

    sp = sub.add_parser("sympow", help="symmetric power of an object")
    add_common(sp)
    sp.add_argument("--object", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_sympow)

    sp = sub.add_parser("symalg", help="truncated symmetric algebra")
    add_common(sp)
    sp.add_argument("--object", required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=cmd_symalg)

    sp = sub.add_parser("frobtwist", help="Frobenius twist of S(object)")
    add_common(sp)
    sp.add_argument("--object", required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--body", action="store_true",
                    help="twist the body S(object)/nil instead")
    sp.set_defaults(func=cmd_frobtwist)

    sp = sub.add_parser("nil", help="nil part of an object")
    add_common(sp)
    sp.add_argument("--object", required=True)
    sp.set_defaults(func=cmd_nil)

    sp = sub.add_parser("quotient", help="additive quotient verification report")
    add_common(sp)
    sp.add_argument("--iota", required=True,
                    help="mono as 'DOM->COD' shorthand, JSON, or a file path")
    sp.add_argument("--N", type=int, required=True)
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    sp.add_argument("--only", help="run only the criterion with this tag or id")
    sp.add_argument("--output", help="write a JSON summary here")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 0:
        parser.error("--n must be nonnegative")
    if getattr(args, "N", None) is not None and args.N < 0:
        parser.error("--N must be nonnegative")
    try:
        return args.func(args)
    except SizeGuardError as exc:
        sys.stderr.write(f"size guard: {exc}\n")
        return 3
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
