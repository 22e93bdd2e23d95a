"""Command-line front end.

Exit status: 0 when every check passes, 1 on a verification failure, 2 on a usage,
parse or schema error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import serialize
from .bialgebroid import (Bialgebroid, check_bialgebroid, from_weak_hopf, re_bialgebroid,
                          to_weak_bialgebra)
from .corpus import (canonical_dk_data, cyclic_group_algebra, discrete_groupoid_algebra,
                     ground_algebra, pair_groupoid_algebra, product_algebra,
                     upper_triangular_algebra, weak_dk_data)
from .doikoppinen import (ComoduleAlgebraW, DKDatum, DKModule, ModuleCoalgebraW, WeakDKDatum, backward_comodule_algebra,
                          backward_module_coalgebra, build_dk_coring, build_weak_coring_iso,
                          check_comodule_algebra_b, check_comodule_algebra_w,
                          check_dk_datum, check_dk_module, check_forgetful_separable,
                          check_induction_separable, check_module_coalgebra_b,
                          check_module_coalgebra_w, check_weak_dk_components,
                          comodule_to_dk_module, dk_module_to_comodule,
                          forward_comodule_algebra, forward_module_coalgebra,
                          induction_unit_certificate, regular_comodule, multiplication_certificate,
                          search_forgetful_certificate, search_induction_certificate)
from .exactlin import Field
from .findim import check_coring
from .report import Report, VerificationError
from .serialize import SchemaError
from .weakhopf import check_weak_bialgebra, check_weak_hopf

VERIFY_KINDS = ("weak-hopf", "weak-bialgebra", "bialgebroid", "coring", "module-coalgebra", "comodule-algebra",
                "dk-datum", "dk-module")
BUILD_KINDS = ("bialgebroid", "weak-bialgebra", "dk-coring", "weak-coring-iso", "translate-ca",
               "translate-mc")
CHECK_KINDS = ("dk-iso", "induction-sep", "forgetful-sep")
CORPUS_KINDS = ("group", "pair-groupoid", "discrete", "re")
DATUM_SHAPES = {"HHH": 0, "HHR": 1, "HRH": 2, "HRR": 3, "HReRe": 4}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- verification


def _labelled(rep: Report, labels: Sequence[str] | None) -> dict:
    d = rep.to_dict()
    if labels:
        for law, entry in zip(rep.laws, d["laws"]):
            w = law.witness
            if w is not None and w.indices and all(isinstance(i, int) and 0 <= i < len(labels)
                                     for i in w.indices):
                entry["witness"]["basis"] = [labels[i] for i in w.indices]
    return d


def verify_object(kind: str, obj) -> tuple[Report, Sequence[str] | None]:
    if kind == "weak-hopf":
        return check_weak_hopf(obj), obj.basis_names
    if kind == "weak-bialgebra":
        return check_weak_bialgebra(obj), obj.basis_names
    if kind == "bialgebroid":
        return check_bialgebroid(obj), obj.total.basis_names
    if kind == "coring":
        return check_coring(obj), None
    if kind == "comodule-algebra":
        if isinstance(obj, ComoduleAlgebraW):
            return check_comodule_algebra_w(obj), obj.algebra.basis_names
        return check_comodule_algebra_b(obj), obj.algebra.basis_names
    if kind == "module-coalgebra":
        if isinstance(obj, ModuleCoalgebraW):
            return check_module_coalgebra_w(obj), None
        return check_module_coalgebra_b(obj), None
    if kind == "dk-datum":
        if isinstance(obj, WeakDKDatum):
            return check_weak_dk_components(obj), None
        return check_dk_datum(obj), None
    if kind == "dk-module":
        return check_dk_module(obj), None
    raise UsageError("cannot verify %s" % kind)


def _cmd_verify(args) -> int:
    reports = []
    for path in args.files:
        obj = serialize.load(path, args.kind)
        rep, labels = verify_object(args.kind, obj)
        rep.subject = "%s %s" % (args.kind, path)
        reports.append(_labelled(rep, labels))
    doc = reports[0] if len(reports) == 1 else reports
    _emit_report(args, doc)
    return 0 if all(r["verdict"] == "pass" for r in reports) else 1


# ---------------------------------------------------------------- builders


def _cmd_build(args) -> int:
    kind = args.kind
    if kind == "bialgebroid":
        out = from_weak_hopf(serialize.load(_one(args), "weak-hopf"))
    elif kind == "weak-bialgebra":
        out = to_weak_bialgebra(serialize.load(_one(args), "bialgebroid"))
    elif kind == "dk-coring":
        d = serialize.load(_one(args), "dk-datum")
        if not isinstance(d, DKDatum):
            raise UsageError("dk-coring needs a bialgebroid-flavor datum")
        out = build_dk_coring(d).coring
    elif kind == "weak-coring-iso":
        d = serialize.load(_one(args), "dk-datum")
        if not isinstance(d, WeakDKDatum):
            raise UsageError("weak-coring-iso needs a weak datum")
        iso = build_weak_coring_iso(d)
        out = {"schema": "weak-coring-iso/1", "field": d.weak_hopf.field.name,
               "coring": serialize.to_dict(iso.coring),
               "theta": serialize.dump_matrix(iso.theta),
               "theta_tilde": serialize.dump_matrix(iso.theta_tilde),
               "subspace": [serialize.dump_vector(v) for v in iso.subspace.basis]}
    elif kind == "translate-ca":
        x = serialize.load(_one(args), "comodule-algebra")
        out = (forward_comodule_algebra(x) if isinstance(x, ComoduleAlgebraW)
               else backward_comodule_algebra(_weak_parent(x)))
    elif kind == "translate-mc":
        x = serialize.load(_one(args), "module-coalgebra")
        out = (forward_module_coalgebra(x) if isinstance(x, ModuleCoalgebraW)
               else backward_module_coalgebra(_weak_parent(x)))
    else:
        raise UsageError("unknown build target %s" % kind)
    _emit(args, out)
    return 0


def _weak_parent(x):
    if x.bialgebroid.weak_hopf is None:
        raise UsageError("backward translation needs a bialgebroid built from a weak Hopf algebra")
    return x


def _one(args) -> str:
    if len(args.files) != 1:
        raise UsageError("expected exactly one input file")
    return args.files[0]


# ---------------------------------------------------------------- checks


def _vector_file(path: str, field: Field, length: int) -> tuple:
    with open(path, encoding="utf-8") as f:
        try:
            v = json.load(f)
        except json.JSONDecodeError as err:
            raise SchemaError("invalid JSON: %s" % err) from None
    if isinstance(v, dict):
        v = v.get("vector", v.get("matrix"))
    return serialize.load_vector(field, v, length)


def _matrix_file(path: str, field: Field, shape) -> object:
    with open(path, encoding="utf-8") as f:
        try:
            v = json.load(f)
        except json.JSONDecodeError as err:
            raise SchemaError("invalid JSON: %s" % err) from None
    if isinstance(v, dict):
        v = v.get("matrix")
    return serialize.load_matrix(field, v, shape)


def _cmd_check(args) -> int:
    obj = serialize.load(_one(args))
    kind = args.kind
    if kind == "dk-iso":
        if isinstance(obj, WeakDKDatum):
            rep = build_weak_coring_iso(obj, verify=False).report
        elif isinstance(obj, (DKDatum, DKModule)):
            rep = _dictionary_report(obj)
        else:
            raise UsageError("dk-iso needs a dk-datum or a dk-module")
        _emit_report(args, rep.to_dict())
        return 0 if rep.passed else 1
    if not isinstance(obj, DKDatum):
        raise UsageError("%s needs a bialgebroid-flavor dk-datum" % kind)
    dkc = build_dk_coring(obj)
    field = obj.bialgebroid.field
    if kind == "induction-sep":
        if args.search_certificate:
            cert = search_induction_certificate(dkc)
            return _search_result(args, cert, lambda c: check_induction_separable(dkc, c),
                                  lambda c: serialize.dump_vector(c))
        cert = (_vector_file(args.certificate, field, dkc.dim) if args.certificate
                else induction_unit_certificate(dkc))
        rep = check_induction_separable(dkc, cert)
    elif kind == "forgetful-sep":
        if args.search_certificate:
            cert = search_forgetful_certificate(dkc)
            return _search_result(args, cert, lambda g: check_forgetful_separable(dkc, g),
                                  serialize.dump_matrix)
        shape = (obj.A.algebra.dim, obj.C.coring.tensor.dim)
        cert = (_matrix_file(args.certificate, field, shape) if args.certificate
                else multiplication_certificate(dkc))
        rep = check_forgetful_separable(dkc, cert)
    else:
        raise UsageError("unknown check %s" % kind)
    _emit_report(args, rep.to_dict())
    return 0 if rep.passed else 1


def _search_result(args, cert, check, dump) -> int:
    doc = {"solvable": cert is not None}
    if cert is not None:
        rep = check(cert)
        doc["certificate"] = dump(cert)
        doc["report"] = rep.to_dict()
        doc["verdict"] = rep.verdict
    else:
        doc["verdict"] = "fail"
    _emit_report(args, doc)
    return 0 if doc["verdict"] == "pass" else 1


def _dictionary_report(obj) -> Report:
    """Send a comodule through the dictionary and back; a datum uses its regular comodule."""
    rep = Report("comodule dictionary %s" % obj.name)
    law = rep.law("round_trip_identity")
    try:
        if isinstance(obj, DKModule):
            dkc = build_dk_coring(obj.datum)
            back = comodule_to_dk_module(dkc, dk_module_to_comodule(dkc, obj))
            law.expect(back.coaction, obj.coaction, note="DK module → comodule → DK module")
        else:
            dkc = build_dk_coring(obj)
            co = regular_comodule(dkc)
            back = dk_module_to_comodule(dkc, comodule_to_dk_module(dkc, co))
            law.expect(back.coaction, co.coaction, note="comodule → DK module → comodule")
    except VerificationError as err:
        if err.report is not None:
            rep.merge(err.report)
        law.fail(note=str(err))
    return rep


# ---------------------------------------------------------------- corpus


def _re_base(spec: str, field: Field):
    if spec in ("Q", "k"):
        return ground_algebra(field)
    if spec == "UT2":
        return upper_triangular_algebra(field)
    if spec.startswith("product:"):
        return product_algebra(int(spec.split(":", 1)[1]), field)
    if spec == "QxQ":
        return product_algebra(2, field)
    raise UsageError("unknown base algebra %r (use Q, QxQ, product:N or UT2)" % spec)


def _cmd_corpus(args) -> int:
    field = Field.parse(args.field)
    kind = args.kind
    if kind == "re":
        obj = re_bialgebroid(_re_base(args.param, field))
    else:
        try:
            n = int(args.param)
        except ValueError:
            raise UsageError("expected an integer size") from None
        if n < 1:
            raise UsageError("size must be positive")
        build = {"group": cyclic_group_algebra, "pair-groupoid": pair_groupoid_algebra,
                 "discrete": discrete_groupoid_algebra}[kind]
        obj = build(n, field)
    if args.datum:
        if args.datum not in DATUM_SHAPES:
            raise UsageError("--datum must be one of %s" % ", ".join(DATUM_SHAPES))
        if args.weak:
            if isinstance(obj, Bialgebroid):
                raise UsageError("--weak needs a weak Hopf algebra")
            data = weak_dk_data(obj)
        else:
            b = obj if isinstance(obj, Bialgebroid) else from_weak_hopf(obj)
            data = canonical_dk_data(b)
        i = DATUM_SHAPES[args.datum]
        if i >= len(data):
            raise UsageError("datum %s is not available for this instance" % args.datum)
        obj = data[i]
    _emit(args, obj)
    return 0


# ---------------------------------------------------------------- output


def _emit(args, obj) -> None:
    text = serialize.dumps(obj)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, doc) -> None:
    text = serialize.dumps(doc)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            f.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    sys.stdout.write(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="Q", help="Q or Fp:<p> (corpus constructors)")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--report", help="also write the JSON report to this file")
    common.add_argument("--search-certificate", action="store_true",
                        help="solve for a separability certificate instead of checking one")
    common.add_argument("--certificate", help="JSON file with a separability certificate")

    p = _Parser(prog="weakdk", description="Exact checks for weak Hopf algebras, "
                "bialgebroids and Doi-Koppinen data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("files", nargs="+")
    v.set_defaults(func=_cmd_verify)
    b = sub.add_parser("build", parents=[common], help="build a derived structure")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("files", nargs="+")
    b.set_defaults(func=_cmd_build)
    c = sub.add_parser("check", parents=[common], help="isomorphism and separability checks")
    c.add_argument("kind", choices=CHECK_KINDS)
    c.add_argument("files", nargs="+")
    c.set_defaults(func=_cmd_check)
    k = sub.add_parser("corpus", parents=[common], help="write a corpus instance")
    k.add_argument("kind", choices=CORPUS_KINDS)
    k.add_argument("param", help="size n, or the base algebra for 're'")
    k.add_argument("--datum", help="emit a Doi-Koppinen datum: HHH, HHR, HRH, HRR or HReRe")
    k.add_argument("--weak", action="store_true", help="emit the weak flavor of the datum")
    k.set_defaults(func=_cmd_corpus)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, SchemaError, OSError) as err:
        sys.stderr.write("weakdk: error: %s\n" % err)
        return 2
    except VerificationError as err:
        sys.stderr.write("weakdk: verification failed: %s\n" % err)
        if err.report is not None:
            sys.stdout.write(serialize.dumps(err.report.to_dict()))
        return 1


if __name__ == "__main__":
    sys.exit(main())
