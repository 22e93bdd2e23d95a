import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weakdk import serialize
from weakdk.bialgebroid import from_weak_hopf, re_bialgebroid, to_weak_bialgebra
from weakdk.corpus import (canonical_dk_data, cyclic_group_algebra, hopf_dk_module,
                           pair_groupoid_algebra, product_algebra, weak_dk_data)
from weakdk.doikoppinen import build_dk_coring
from weakdk.exactlin import GF, QQ
from weakdk.serialize import SchemaError
from weakdk.weakhopf import check_weak_hopf

P2 = pair_groupoid_algebra(2)
B_P2 = from_weak_hopf(P2)
D_P2 = canonical_dk_data(B_P2)


def _objects():
    yield P2
    yield pair_groupoid_algebra(2, GF(7))
    yield to_weak_bialgebra(B_P2)
    yield B_P2
    yield re_bialgebroid(product_algebra(2))
    yield B_P2.coring
    yield build_dk_coring(D_P2[0]).coring
    for d in D_P2[:2]:
        yield d
        yield d.A
        yield d.C
    w = weak_dk_data(P2)[0]
    yield w
    yield w.A
    yield w.C
    yield hopf_dk_module(D_P2[0])
    yield check_weak_hopf(P2)


@pytest.mark.parametrize("obj", list(_objects()), ids=lambda o: type(o).__name__)
def test_round_trip_is_byte_identical(obj):
    text = serialize.dumps(obj)
    if hasattr(obj, "laws"):
        assert json.loads(text)["verdict"] == "pass"
        return
    again = serialize.loads(text)
    assert type(again) is type(obj)
    assert serialize.dumps(again) == text


def test_round_trip_preserves_structure():
    h = serialize.loads(serialize.dumps(P2))
    assert h.algebra == P2.algebra
    assert h.coalgebra.comult == P2.coalgebra.comult
    assert h.antipode == P2.antipode
    b = serialize.loads(serialize.dumps(B_P2))
    assert b.comult == B_P2.comult and b.counit == B_P2.counit
    assert b.weak_hopf is not None and b.separability is not None


def test_document_shape():
    doc = serialize.to_dict(P2)
    assert doc["schema"] == "weak-hopf/1"
    assert doc["field"] == "Q"
    assert doc["dim"] == 4
    assert doc["basis"] == ["e11", "e12", "e21", "e22"]
    assert doc["mult"][1][2] == ["1", "0", "0", "0"]
    assert serialize.to_dict(pair_groupoid_algebra(2, GF(5)))["field"] == "Fp:5"


def test_expected_kind_is_enforced():
    with pytest.raises(SchemaError):
        serialize.from_dict(serialize.to_dict(P2), expect="bialgebroid")


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("mult"),
    lambda d: d.__setitem__("schema", "nonsense/1"),
    lambda d: d.__setitem__("field", "R"),
    lambda d: d["unit"].__setitem__(0, 1.5),
    lambda d: d["unit"].__setitem__(0, True),
    lambda d: d["unit"].__setitem__(0, "1/0"),
    lambda d: d["antipode"].pop(),
    lambda d: d["comult"][0].append("0"),
    lambda d: d.__setitem__("dim", 5),
], ids=["missing", "kind", "field", "float", "bool", "zero-denominator", "short", "ragged",
        "dim"])
def test_schema_errors(mutate):
    doc = serialize.to_dict(P2)
    mutate(doc)
    with pytest.raises(SchemaError):
        serialize.from_dict(doc)


def test_invalid_json_is_a_schema_error():
    with pytest.raises(SchemaError):
        serialize.loads("{not json")


def test_file_round_trip(tmp_path):
    path = tmp_path / "z3.json"
    h = cyclic_group_algebra(3)
    serialize.dump(h, path)
    assert serialize.dumps(serialize.load(path, "weak-hopf")) == path.read_text()


@given(st.fractions(max_denominator=50))
def test_rational_scalars_round_trip(x):
    s = serialize.dump_scalar(QQ(x))
    assert isinstance(s, str)
    assert serialize.load_scalar(QQ, s) == x
    if x.denominator == 1:
        assert "/" not in s


@given(st.integers(0, 10 ** 6))
def test_prime_field_scalars_round_trip(n):
    f = GF(101)
    s = serialize.dump_scalar(f(n))
    assert s == n % 101
    assert serialize.load_scalar(f, s) == f(n)


def test_reduced_form():
    assert serialize.dump_scalar(Fraction(6, -4)) == "-3/2"
