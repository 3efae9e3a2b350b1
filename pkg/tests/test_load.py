import json

import pytest

from pyCoring.base import Field, QQ_FIELD, ValidationReport, SolverReport
from pyCoring.scalardicts import ScalarDict, LinearMap
from pyCoring.components import build_corpus, trivial, dualnumbers, CORPUS
from pyCoring.utils import (SpecError, parse_spec, dump_spec, input_hash,
    load, dump, Report, pformat)
from pyCoring.utils.report import jsonable, matrix_strings


TRIVIAL = """{
  "name": "trivial",
  "field": "Q",
  "dim": 1,
  "basis": ["e"],
  "delta": [{"from": 0, "left": 0, "right": 0, "coeff": 1}],
  "epsilon": [{"at": 0, "coeff": "1"}]
}
"""


def presentation(**overrides):
    doc = json.loads(TRIVIAL)
    doc.update(overrides)
    return json.dumps(doc, indent=2)


def test_parse_trivial():
    c = parse_spec(TRIVIAL)
    assert c == trivial()


@pytest.mark.parametrize("field", ["Q", "Fp:5"])
@pytest.mark.parametrize("name", CORPUS)
def test_dump_then_parse_is_identity(name, field):
    c = build_corpus(name, field=Field.parse(field))
    text = dump_spec(c)
    assert parse_spec(text) == c
    assert dump_spec(parse_spec(text)) == text


def test_duplicate_records_are_summed():
    text = presentation(delta=[
        {"from": 0, "left": 0, "right": 0, "coeff": "1/2"},
        {"from": 0, "left": 0, "right": 0, "coeff": "1/2"}])
    assert parse_spec(text).constant(0, 0, 0) == QQ_FIELD.one


def test_epsilon_is_optional():
    doc = json.loads(TRIVIAL)
    del doc["epsilon"]
    c = parse_spec(json.dumps(doc))
    assert not c.counital
    assert '"epsilon"' not in dump_spec(c)


def test_zero_denominator_has_position():
    text = presentation(delta=[
        {"from": 0, "left": 0, "right": 0, "coeff": "1/0"}])
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    assert info.value.line is not None
    assert "delta[0].coeff" in str(info.value)
    assert str(info.value).startswith(f"Line {info.value.line}, column")


def test_json_syntax_error_has_position():
    with pytest.raises(SpecError) as info:
        parse_spec('{\n  "name": ,\n}')
    assert info.value.line == 2
    assert info.value.col is not None


def test_index_out_of_range():
    text = presentation(delta=[
        {"from": 0, "left": 5, "right": 0, "coeff": 1}])
    with pytest.raises(SpecError, match=r"delta\[0\]\.left: Index 5 out of range for dim 1"):
        parse_spec(text)


def test_non_prime_field():
    with pytest.raises(SpecError) as info:
        parse_spec(presentation(field="Fp:4"))
    assert "field" in str(info.value)
    assert info.value.line == 3


@pytest.mark.parametrize("overrides, message", [
    ({"dim": "1"}, "dim"),
    ({"basis": ["e", "f"]}, "Expected 1 labels"),
    ({"extra": 1}, "Unknown field 'extra'"),
    ({"delta": {}}, "Expected a list"),
    ({"delta": [{"from": 0, "left": 0, "right": 0}]}, "Missing field 'coeff'"),
    ({"delta": [{"from": 0, "left": 0, "right": 0, "coeff": 1.5}]},
        "Coefficient must be"),
    ({"delta": [{"from": 0, "left": 0, "right": 0, "coeff": "one"}]},
        "Malformed rational"),
])
def test_malformed_presentations(overrides, message):
    with pytest.raises(SpecError, match=message):
        parse_spec(presentation(**overrides))


def test_missing_required_field():
    doc = json.loads(TRIVIAL)
    del doc["delta"]
    with pytest.raises(SpecError, match="Missing field 'delta'"):
        parse_spec(json.dumps(doc))


BROKEN = {
    "name": "broken",
    "field": "Q",
    "dim": 2,
    "basis": ["g", "x"],
    "delta": [{"from": 0, "left": 0, "right": 0, "coeff": 1},
              {"from": 1, "left": 1, "right": 1, "coeff": 1}],
    "epsilon": [{"at": 0, "coeff": 1}],
}


def test_validation_failure_names_witness():
    text = json.dumps(BROKEN)
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    assert str(info.value) == \
        "Coalgebra 'broken' is not counit-left at basis element 'x' (index 1)"
    c = parse_spec(text, validate=False)
    assert c.dim == 2


def test_input_hash_is_canonical():
    c = dualnumbers()
    reordered = json.loads(dump_spec(c))
    reordered["delta"].reverse()
    again = parse_spec(json.dumps(reordered))
    assert input_hash(again) == input_hash(c)
    assert len(input_hash(c)) == 64
    assert input_hash(trivial()) != input_hash(c)


def test_load_and_dump(tmp_path):
    path = tmp_path / "dn.json"
    dump(dualnumbers(), str(path))
    assert load(str(path)) == dualnumbers()
    with pytest.raises(SpecError, match="Cannot read"):
        load(str(tmp_path / "missing.json"))


### Reports ###

def test_report_json_round_trip():
    report = Report("cosep m2.json", "ab" * 32,
        verdicts={"coseparable": True},
        certificates={"cointegral": [["1/2", "0"], ["0", "1/2"]]},
        dimensions={"coseparable": {"rank": 3}},
        wall_time="0.010s")
    assert Report.from_json(report.to_json()) == report
    untimed = json.loads(report.to_json(timed=False))
    assert "wall_time" not in untimed
    assert untimed["certificates"]["cointegral"][0][0] == "1/2"


def test_report_rejects_foreign_json():
    with pytest.raises(SpecError):
        Report.from_json("[1, 2]")
    with pytest.raises(SpecError):
        Report.from_json('{"command": "x", "bogus": 1}')
    with pytest.raises(SpecError):
        Report.from_json("{")


def test_report_records_validation_and_solver():
    vr = ValidationReport("x")
    vr.record("coassociative", False, 3)
    vr.flag("degenerate-zero")
    report = Report("validate x")
    assert not report.add_validation("coalgebra", vr)
    assert report.witnesses == {"coalgebra:coassociative": 3}
    assert report.flags == ["coalgebra:degenerate-zero"]
    assert not report.add_solver("coseparable", SolverReport(False, 1, 2, 4, 5))
    assert report.dimensions["coseparable"]["dimension"] == -1
    assert not report.ok
    text = report.to_text()
    assert "  coalgebra: FAIL" in text
    assert "  solver coseparable: rank=1, augmented_rank=2" in text


def test_jsonable_values():
    v = ScalarDict(QQ_FIELD, {(0, 1): "1/2"})
    assert jsonable(v) == {"0,1": "1/2"}
    f = LinearMap(QQ_FIELD, {(0,): v})
    assert jsonable(f) == {"0": {"0,1": "1/2"}}
    assert jsonable((1, "a", None)) == [1, "a", None]
    rows = [[QQ_FIELD.convert("-2/3")]]
    assert matrix_strings(rows, QQ_FIELD) == [["-2/3"]]


def test_pformat_exact_values():
    v = ScalarDict(QQ_FIELD, {(i,): f"1/{i + 2}" for i in range(20)})
    text = pformat(v)
    assert text.startswith("ScalarDict({")
    assert "'1/21'" in text
    assert text.endswith("field=Q)")
    assert pformat(ScalarDict(QQ_FIELD, {"a": 1})) == repr(ScalarDict(QQ_FIELD, {"a": 1}))
