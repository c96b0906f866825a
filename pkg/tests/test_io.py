import json

import pytest

from bihom import LinearMap, classify
from bihom.catalog import CATALOG, build, make_cross3, make_ex1
from bihom.errors import DocumentSyntaxError, InvariantError, NotCommuting, SchemaError
from bihom.io import parse, serialize, serialize_report


def doc(**over):
    base = json.loads(serialize(make_ex1(1)))
    base.update(over)
    return json.dumps(base)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_roundtrip(name):
    obj = build(name)
    text = serialize(obj)
    assert parse(text) == obj
    assert serialize(parse(text)) == text


def test_basis_labels_kept_optional():
    text = serialize(make_ex1(1), basis=["e1", "e2"])
    assert json.loads(text)["basis"] == ["e1", "e2"]
    assert parse(text) == make_ex1(1)


def test_canonical_rationals():
    d = json.loads(serialize(build("beta-lambda", **{"lambda": 1})))
    assert d["matrix"] == [["1/2", "-1/2"], ["0", "1"]]


def test_empty_document():
    with pytest.raises(DocumentSyntaxError):
        parse("")


def test_malformed_json_location():
    with pytest.raises(DocumentSyntaxError) as info:
        parse('{"kind": "bihom-algebra",\n  "dim": }')
    assert "line 2" in str(info.value)


def test_noncommuting_maps():
    with pytest.raises(NotCommuting) as info:
        parse(doc(alpha=[["0", "1"], ["1", "0"]], beta=[["1", "0"], ["0", "2"]]))
    assert "alpha" in str(info.value) and "beta" in str(info.value)
    assert isinstance(info.value, InvariantError)


@pytest.mark.parametrize(
    "over, where",
    [
        ({"dim": 0}, "dim"),
        ({"kind": "lie-algebra"}, "kind"),
        ({"extra": 1}, "document"),
        ({"convention": "row"}, "convention"),
        ({"alpha": [["1", "0"]]}, "alpha"),
        ({"alpha": [["1", 0.5], ["0", "1"]]}, "alpha[0][1]"),
        ({"mu": [{"i": 0, "j": 5, "coeffs": {"0": "1"}}]}, "mu[0].j"),
        ({"mu": [{"i": 0, "coeffs": {"0": "1"}}]}, "mu[0]"),
        ({"mu": [{"i": 0, "j": 1, "coeffs": {"0": "x"}}]}, "mu[0].coeffs"),
    ],
)
def test_schema_errors(over, where):
    with pytest.raises(SchemaError) as info:
        parse(doc(**over))
    assert info.value.location.startswith(where)


def test_missing_field():
    d = json.loads(doc())
    del d["beta"]
    with pytest.raises(SchemaError):
        parse(json.dumps(d))


def test_linear_map_file():
    f = LinearMap.from_columns([(2, 0), (1, 1)])
    assert parse(serialize(f)) == f


class TestReports:
    def test_all_pass_has_no_witness(self):
        d = json.loads(serialize_report(classify(make_cross3(), ["I6", "I7", "I8"])))
        assert [r["verdict"] for r in d["reports"]] == ["pass"] * 3
        assert all("witness" not in r for r in d["reports"])

    def test_ex1_witness(self):
        d = json.loads(serialize_report(classify(make_ex1(1), ["I2"])))
        (r,) = d["reports"]
        assert r["witness"] == [0, 1, 1] and r["residual"] == ["4", "0"]

    def test_not_applicable_reason(self):
        d = json.loads(serialize_report(classify(make_ex1(1), ["I9"])))
        (r,) = d["reports"]
        assert r["verdict"] == "not-applicable" and r["reason"]

    def test_field_order_and_determinism(self):
        a = serialize_report(classify(make_ex1(1)))
        b = serialize_report(classify(make_ex1(1)))
        assert a == b
        assert list(json.loads(a)) == ["kind", "dim", "regular", "multiplicative", "reports", "flags"]
