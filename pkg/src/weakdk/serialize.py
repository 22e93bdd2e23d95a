"""JSON encoding of every structure, with canonical scalars and stable key order.

Rationals are written as reduced ``"p/q"`` strings (``"/1"`` omitted) and prime-field
elements as integers in ``[0, p)``.  Matrices are lists of rows.  Every document carries
``"schema": "<kind>/1"`` and ``"field"``; nested parents are embedded without those keys.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bialgebroid import Bialgebroid, ReRing, RRing
from .doikoppinen import (ComoduleAlgebraB, ComoduleAlgebraW, DKDatum, DKModule,
                          ModuleCoalgebraB, ModuleCoalgebraW, WeakDKDatum, dk_module_tensor)
from .exactlin import Field, Fp, Matrix
from .findim import BalancedTensor, Coring, FinAlgebra, FinCoalgebra, RBimodule
from .report import Report
from .weakhopf import BaseAlgebra, SeparablePair, WeakBialgebra, WeakHopf, extract_base

VERSION = 1


class SchemaError(ValueError):
    """The document does not match the expected schema."""


# ---------------------------------------------------------------- scalars and arrays


def dump_scalar(x) -> Any:
    if isinstance(x, Fp):
        return x.value
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def load_scalar(field: Field, v) -> Any:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SchemaError("scalar must be an integer or a \"p/q\" string, got %r" % (v,))
    try:
        return field(Fraction(v) if isinstance(v, str) else v)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError("bad scalar %r: %s" % (v, err)) from None


def dump_vector(v) -> list:
    return [dump_scalar(x) for x in v]


def load_vector(field: Field, v, length: int | None = None) -> tuple:
    if not isinstance(v, list):
        raise SchemaError("expected a list of scalars")
    if length is not None and len(v) != length:
        raise SchemaError("expected %d entries, got %d" % (length, len(v)))
    return tuple(load_scalar(field, x) for x in v)


def dump_matrix(m: Matrix) -> list:
    return [dump_vector(r) for r in m.data]


def load_matrix(field: Field, v, shape: tuple[int, int] | None = None) -> Matrix:
    if not isinstance(v, list):
        raise SchemaError("expected a matrix as a list of rows")
    rows = [load_vector(field, r) for r in v]
    cols = shape[1] if shape is not None else (len(rows[0]) if rows else 0)
    if any(len(r) != cols for r in rows):
        raise SchemaError("ragged matrix")
    if shape is not None and len(rows) != shape[0]:
        raise SchemaError("matrix has %d rows, expected %d" % (len(rows), shape[0]))
    return Matrix(rows, field, cols=cols)


def _get(d: dict, key: str):
    if not isinstance(d, dict):
        raise SchemaError("expected an object")
    if key not in d:
        raise SchemaError("missing key %r" % key)
    return d[key]


def _count(d: dict, key: str) -> int:
    v = _get(d, key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise SchemaError("%r must be a non-negative integer" % key)
    return v


# ---------------------------------------------------------------- algebras and coalgebras


def algebra_to_dict(a: FinAlgebra) -> dict:
    return {"dim": a.dim, "basis": list(a.basis_names),
            "mult": [[dump_vector(v) for v in row] for row in a.mult],
            "unit": dump_vector(a.unit)}


def algebra_from_dict(field: Field, d: dict) -> FinAlgebra:
    n = _count(d, "dim")
    mult = _get(d, "mult")
    if not isinstance(mult, list) or len(mult) != n or any(
            not isinstance(r, list) or len(r) != n for r in mult):
        raise SchemaError("mult must be a dim x dim array of vectors")
    table = [[load_vector(field, v, n) for v in row] for row in mult]
    names = d.get("basis")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise SchemaError("basis must list dim labels")
    return FinAlgebra(field, table, load_vector(field, _get(d, "unit"), n), names)


def coalgebra_to_dict(c: FinCoalgebra) -> dict:
    return {"dim": c.dim, "basis": list(c.basis_names), "comult": dump_matrix(c.comult),
            "counit": dump_vector(c.counit)}


def coalgebra_from_dict(field: Field, d: dict) -> FinCoalgebra:
    n = _count(d, "dim")
    return FinCoalgebra(field, load_matrix(field, _get(d, "comult"), (n * n, n)),
                        load_vector(field, _get(d, "counit"), n), d.get("basis"))


def _weak_to_dict(h: WeakBialgebra) -> dict:
    d = algebra_to_dict(h.algebra)
    d.update(comult=dump_matrix(h.coalgebra.comult), counit=dump_vector(h.coalgebra.counit),
             name=h.name)
    if isinstance(h, WeakHopf):
        d["antipode"] = dump_matrix(h.antipode)
    return d


def _weak_from_dict(field: Field, d: dict, antipode: bool) -> WeakBialgebra:
    a = algebra_from_dict(field, d)
    n = a.dim
    c = FinCoalgebra(field, load_matrix(field, _get(d, "comult"), (n * n, n)),
                     load_vector(field, _get(d, "counit"), n), a.basis_names)
    name = d.get("name", "")
    if antipode:
        return WeakHopf(a, c, load_matrix(field, _get(d, "antipode"), (n, n)), name=name)
    return WeakBialgebra(a, c, name)


# ---------------------------------------------------------------- corings and bialgebroids


def _coring_to_dict(c: Coring) -> dict:
    b = c.bimodule
    return {"base": algebra_to_dict(c.base), "dim": c.dim,
            "left": [dump_matrix(m) for m in b.left], "right": [dump_matrix(m) for m in b.right],
            "comult": dump_matrix(c.comult), "counit": dump_matrix(c.counit)}


def _coring_from_dict(field: Field, d: dict, base: FinAlgebra | None = None) -> Coring:
    R = base if base is not None else algebra_from_dict(field, _get(d, "base"))
    n = _count(d, "dim")
    acts = []
    for key in ("left", "right"):
        v = _get(d, key)
        if not isinstance(v, list) or len(v) != R.dim:
            raise SchemaError("%r must hold one matrix per base basis element" % key)
        acts.append([load_matrix(field, m, (n, n)) for m in v])
    bim = RBimodule(R, n, acts[0], acts[1], d.get("name", "C"))
    t = BalancedTensor(bim, bim)
    return Coring(R, bim, load_matrix(field, _get(d, "comult"), (t.dim, n)),
                  load_matrix(field, _get(d, "counit"), (R.dim, n)), t)


def _bialgebroid_to_dict(b: Bialgebroid) -> dict:
    r = b.re_ring
    d = {"name": b.name, "base": algebra_to_dict(b.base), "total": algebra_to_dict(b.total),
         "source": dump_matrix(r.source), "target": dump_matrix(r.target),
         "comult": dump_matrix(b.comult), "counit": dump_matrix(b.counit)}
    if b.weak_hopf is not None:
        d["weak_hopf"] = _weak_to_dict(b.weak_hopf)
    elif b.separability is not None:
        d["separability"] = {"e": dump_vector(b.separability.idempotent_e),
                             "phi": dump_vector(b.separability.frobenius_phi)}
    if b.re_base is not None:
        d["re_example"] = True
    return d


def _bialgebroid_from_dict(field: Field, d: dict) -> Bialgebroid:
    R = algebra_from_dict(field, _get(d, "base"))
    H = algebra_from_dict(field, _get(d, "total"))
    shape = (H.dim, R.dim)
    ring = ReRing(R, H, load_matrix(field, _get(d, "source"), shape),
                  load_matrix(field, _get(d, "target"), shape))
    bim = ring.coring_bimodule()
    tensor = BalancedTensor(bim, bim)
    b = Bialgebroid(ring, load_matrix(field, _get(d, "comult"), (tensor.dim, H.dim)),
                    load_matrix(field, _get(d, "counit"), (R.dim, H.dim)), tensor,
                    name=d.get("name", ""))
    if "weak_hopf" in d:
        h = _weak_from_dict(field, d["weak_hopf"], antipode=True)
        base = _matching_base(h, b)
        if base is not None:
            b.weak_hopf = h
            b.separability = base
    elif "separability" in d:
        sep = _get(d, "separability")
        b.separability = SeparablePair(R, load_vector(field, _get(sep, "e"), R.dim ** 2),
                                       load_vector(field, _get(sep, "phi"), R.dim))
    if d.get("re_example"):
        b.re_base = R
    return b


def _matching_base(h: WeakHopf, b: Bialgebroid) -> BaseAlgebra | None:
    """The base of ``h`` if ``b`` is literally the bialgebroid built from it."""
    if h.algebra != b.total or h.antipode_inv is None:
        return None
    try:
        base = extract_base(h)
    except Exception:
        return None
    if base.r_algebra != b.base or base.inclusion != b.re_ring.source:
        return None
    return base


# ---------------------------------------------------------------- Doi-Koppinen pieces


def _parent_to_dict(p) -> dict:
    return _weak_to_dict(p) if isinstance(p, WeakHopf) else _bialgebroid_to_dict(p)


def _ca_body(x) -> dict:
    d = {"algebra": algebra_to_dict(x.algebra), "coaction": dump_matrix(x.coaction),
         "name": x.name}
    if isinstance(x, ComoduleAlgebraB):
        d["source"] = dump_matrix(x.source)
    return d


def _ca_from_body(field: Field, parent, d: dict):
    A = algebra_from_dict(field, _get(d, "algebra"))
    name = d.get("name", "")
    if isinstance(parent, WeakHopf):
        co = load_matrix(field, _get(d, "coaction"), (parent.dim * A.dim, A.dim))
        return ComoduleAlgebraW(parent, A, co, name)
    ring = RRing(parent.base, A, load_matrix(field, _get(d, "source"), (A.dim, parent.base.dim)))
    t = BalancedTensor(parent.coring.bimodule, ring.bimodule())
    co = load_matrix(field, _get(d, "coaction"), (t.dim, A.dim))
    return ComoduleAlgebraB(parent, ring, co, t, name)


def _mc_body(x) -> dict:
    d = {"action": [dump_matrix(m) for m in x.action], "name": x.name}
    if isinstance(x, ModuleCoalgebraW):
        d["coalgebra"] = coalgebra_to_dict(x.coalgebra)
    else:
        d["coring"] = _coring_to_dict(x.coring)
    return d


def _mc_from_body(field: Field, parent, d: dict):
    acts = _get(d, "action")
    if not isinstance(acts, list) or len(acts) != parent.dim:
        raise SchemaError("action must hold one matrix per basis element of H")
    name = d.get("name", "")
    if isinstance(parent, WeakHopf):
        c = coalgebra_from_dict(field, _get(d, "coalgebra"))
        return ModuleCoalgebraW(parent, c, [load_matrix(field, m, (c.dim, c.dim)) for m in acts],
                                name)
    c = _coring_from_dict(field, _get(d, "coring"), parent.base)
    return ModuleCoalgebraB(parent, c, [load_matrix(field, m, (c.dim, c.dim)) for m in acts],
                            name)


def _flavor(p) -> str:
    return "weak" if isinstance(p, WeakHopf) else "bialgebroid"


def _load_parent(field: Field, d: dict):
    flavor = _get(d, "flavor")
    if flavor == "weak":
        return _weak_from_dict(field, _get(d, "parent"), antipode=True)
    if flavor == "bialgebroid":
        return _bialgebroid_from_dict(field, _get(d, "parent"))
    raise SchemaError("flavor must be \"weak\" or \"bialgebroid\"")


def _datum_to_dict(d) -> dict:
    parent = d.weak_hopf if isinstance(d, WeakDKDatum) else d.bialgebroid
    return {"flavor": _flavor(parent), "parent": _parent_to_dict(parent), "name": d.name,
            "A": _ca_body(d.A), "C": _mc_body(d.C)}


def _datum_from_dict(field: Field, d: dict):
    parent = _load_parent(field, d)
    A = _ca_from_body(field, parent, _get(d, "A"))
    C = _mc_from_body(field, parent, _get(d, "C"))
    cls = WeakDKDatum if isinstance(parent, WeakHopf) else DKDatum
    return cls(parent, A, C, d.get("name", ""))


# ---------------------------------------------------------------- documents


def _field_of(obj) -> Field:
    if hasattr(obj, "field"):
        return obj.field
    for attr in ("weak_hopf", "bialgebroid", "datum", "base"):
        if hasattr(obj, attr):
            return _field_of(getattr(obj, attr))
    raise TypeError("cannot determine the field of %r" % (obj,))


def to_dict(obj) -> dict:
    """The JSON document for any serializable structure."""
    if isinstance(obj, WeakHopf):
        kind, body = "weak-hopf", _weak_to_dict(obj)
    elif isinstance(obj, WeakBialgebra):
        kind, body = "weak-bialgebra", _weak_to_dict(obj)
    elif isinstance(obj, Bialgebroid):
        kind, body = "bialgebroid", _bialgebroid_to_dict(obj)
    elif isinstance(obj, Coring):
        kind, body = "coring", _coring_to_dict(obj)
    elif isinstance(obj, (ComoduleAlgebraW, ComoduleAlgebraB)):
        kind = "comodule-algebra"
        parent = obj.weak_hopf if isinstance(obj, ComoduleAlgebraW) else obj.bialgebroid
        body = {"flavor": _flavor(parent), "parent": _parent_to_dict(parent), **_ca_body(obj)}
    elif isinstance(obj, (ModuleCoalgebraW, ModuleCoalgebraB)):
        kind = "module-coalgebra"
        parent = obj.weak_hopf if isinstance(obj, ModuleCoalgebraW) else obj.bialgebroid
        body = {"flavor": _flavor(parent), "parent": _parent_to_dict(parent), **_mc_body(obj)}
    elif isinstance(obj, (WeakDKDatum, DKDatum)):
        kind, body = "dk-datum", _datum_to_dict(obj)
    elif isinstance(obj, DKModule):
        kind = "dk-module"
        body = {"datum": _datum_to_dict(obj.datum), "dim": obj.dim, "name": obj.name,
                "action": [dump_matrix(m) for m in obj.action],
                "coaction": dump_matrix(obj.coaction)}
    elif isinstance(obj, Report):
        return obj.to_dict()
    else:
        raise TypeError("no schema for %s" % type(obj).__name__)
    field = _field_of(obj)
    return {"schema": "%s/%d" % (kind, VERSION), "field": field.name, **body}


KINDS = ("weak-hopf", "weak-bialgebra", "bialgebroid", "coring", "comodule-algebra",
         "module-coalgebra", "dk-datum", "dk-module")


def kind_of(d: dict) -> str:
    schema = _get(d, "schema")
    if not isinstance(schema, str) or "/" not in schema:
        raise SchemaError("schema must look like \"<kind>/1\"")
    kind, version = schema.rsplit("/", 1)
    if kind not in KINDS:
        raise SchemaError("unknown kind %r" % kind)
    if version != str(VERSION):
        raise SchemaError("unsupported schema version %s" % version)
    return kind


def from_dict(d: dict, expect: str | None = None):
    """Parse a document; ``expect`` restricts the kind.  Raises :class:`SchemaError`."""
    kind = kind_of(d)
    if expect is not None and kind != expect:
        raise SchemaError("expected a %s document, got %s" % (expect, kind))
    try:
        field = Field.parse(_get(d, "field"))
    except (ValueError, TypeError) as err:
        raise SchemaError(str(err)) from None
    try:
        if kind == "weak-hopf":
            return _weak_from_dict(field, d, antipode=True)
        if kind == "weak-bialgebra":
            return _weak_from_dict(field, d, antipode=False)
        if kind == "bialgebroid":
            return _bialgebroid_from_dict(field, d)
        if kind == "coring":
            return _coring_from_dict(field, d)
        if kind == "comodule-algebra":
            return _ca_from_body(field, _load_parent(field, d), d)
        if kind == "module-coalgebra":
            return _mc_from_body(field, _load_parent(field, d), d)
        if kind == "dk-datum":
            return _datum_from_dict(field, d)
        datum = _datum_from_dict(field, _get(d, "datum"))
        if not isinstance(datum, DKDatum):
            raise SchemaError("a dk-module needs a bialgebroid-flavor datum")
        n = _count(d, "dim")
        acts = _get(d, "action")
        if not isinstance(acts, list) or len(acts) != datum.A.algebra.dim:
            raise SchemaError("action must hold one matrix per basis element of A")
        action = [load_matrix(field, m, (n, n)) for m in acts]
        t = dk_module_tensor(datum, action)
        return DKModule(datum, action, load_matrix(field, _get(d, "coaction"), (t.dim, n)), t,
                        d.get("name", ""))
    except SchemaError:
        raise
    except (ValueError, TypeError, KeyError, IndexError) as err:
        raise SchemaError("%s: %s" % (kind, err)) from None


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    d = obj if isinstance(obj, (dict, list)) else to_dict(obj)
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, expect: str | None = None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError("invalid JSON: %s" % err) from None
    return from_dict(d, expect)


def load(path: str, expect: str | None = None):
    with open(path, encoding="utf-8") as f:
        return loads(f.read(), expect)


def dump(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(obj))


__all__ = ["SchemaError", "dump_scalar", "load_scalar", "to_dict", "from_dict", "dumps",
           "loads", "dump", "load", "kind_of", "KINDS"]
