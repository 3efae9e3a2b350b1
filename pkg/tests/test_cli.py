import io
import json

import pytest

from pyCoring.cli import run_command, main, EXIT_OK, EXIT_FAIL, EXIT_INPUT
from pyCoring.components import (THEOREM_LEGS, grouplike, matrix, dualnumbers,
    trivial)
from pyCoring.utils import dump, dump_spec


@pytest.fixture
def write(tmp_path):
    def write(c, name="c.json"):
        path = tmp_path / name
        dump(c, str(path))
        return str(path)
    return write


def run(*argv):
    out = io.StringIO()
    report, code = run_command(list(argv), out)
    return report, code, out.getvalue()


def test_corpus_emits_presentation():
    _, code, text = run("corpus", "matrix", "--n", "2")
    assert code == EXIT_OK
    assert text == dump_spec(matrix(2))


def test_corpus_over_prime_field():
    _, code, text = run("corpus", "grouplike(2)", "--field", "Fp:5")
    assert code == EXIT_OK
    assert json.loads(text)["field"] == "Fp:5"


@pytest.mark.parametrize("argv", [
    ["corpus", "octonions"],
    ["corpus", "trivial", "--field", "Fp:4"],
    ["corpus", "matrix"],
    ["frobnicate"],
    [],
])
def test_bad_invocations_exit_two(argv):
    _, code, _ = run(*argv)
    assert code == EXIT_INPUT


def test_theorem_on_matrix(write):
    report, code, text = run("theorem", write(matrix(2)), "--no-time")
    assert code == EXIT_OK
    assert set(report.certificates) == set(THEOREM_LEGS)
    data = json.loads(text)
    assert all(data["verdicts"].values())
    assert "wall_time" not in data


def test_theorem_on_dualnumbers_is_infeasible(write):
    report, code, _ = run("theorem", write(dualnumbers()), "--workers", "2")
    assert code == EXIT_FAIL
    assert report.verdicts["agree"]
    assert not report.certificates


def test_cosep(write):
    report, code, _ = run("cosep", write(grouplike(2)))
    assert code == EXIT_OK
    assert report.certificates["cointegral"] == [["1", "0"], ["0", "1"]]
    assert report.verdicts["retraction"]
    report, code, _ = run("cosep", write(dualnumbers(), "dn.json"))
    assert code == EXIT_FAIL
    assert report.verdicts == {"coseparable": False}
    assert report.dimensions["coseparable"]["dimension"] == -1


@pytest.mark.parametrize("side", ["left", "right"])
def test_counit(write, side):
    report, code, _ = run("counit", write(grouplike(2)), "--side", side)
    assert code == EXIT_OK
    assert report.certificates[f"{side}-counit"] == [["1", "0"], ["0", "1"]]
    assert ("induced-algebra" in report.verdicts) is (side == "left")


def test_dorroh(write):
    report, code, _ = run("dorroh", write(dualnumbers()))
    assert code == EXIT_OK, report.witnesses
    assert report.dimensions["dorroh"]["carrier"] == 4
    assert report.dimensions["dorroh"]["algebra"] == 2
    assert report.verdicts["forget-lift"]


def test_validate_reports_witness(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({
        "name": "broken", "field": "Q", "dim": 2, "basis": ["g", "x"],
        "delta": [{"from": 0, "left": 0, "right": 0, "coeff": 1},
                  {"from": 1, "left": 1, "right": 1, "coeff": 1}],
        "epsilon": [{"at": 0, "coeff": 1}]}))
    report, code, _ = run("validate", str(path))
    assert code == EXIT_FAIL
    assert report.witnesses["coalgebra:counit-left"] == 1
    _, code, _ = run("cosep", str(path))
    assert code == EXIT_INPUT


def test_malformed_file_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x", "field": "Q",')
    report, code, text = run("validate", str(path))
    assert code == EXIT_INPUT
    assert report is None and text == ""
    assert "error: Line 1" in capsys.readouterr().err


def test_missing_file_exits_two(tmp_path):
    _, code, _ = run("validate", str(tmp_path / "nope.json"))
    assert code == EXIT_INPUT


def test_balanced_uses_seed_variable(write, monkeypatch):
    path = write(grouplike(2))
    monkeypatch.setenv("COALG_SEED", "5")
    report, code, _ = run("balanced", path, "--trials", "10")
    assert code == EXIT_OK
    assert report.dimensions["balanced"]["seed"] == 5
    assert report.dimensions["balanced"]["trials"] == 10
    report, _, _ = run("balanced", path, "--trials", "10", "--seed", "9")
    assert report.dimensions["balanced"]["seed"] == 9


def test_bad_seed_variable_exits_two(write, monkeypatch):
    path = write(trivial())
    monkeypatch.setenv("COALG_SEED", "seven")
    _, code, _ = run("balanced", path)
    assert code == EXIT_INPUT


def test_reruns_are_byte_identical(write):
    path = write(matrix(2))
    first = run("theorem", path, "--no-time")[2]
    second = run("theorem", path, "--no-time")[2]
    assert first == second


def test_saved_report_renders_as_text(write, tmp_path):
    _, _, text = run("cosep", write(grouplike(2)))
    saved = tmp_path / "report.json"
    saved.write_text(text)
    _, code, rendered = run("report", str(saved), "--text")
    assert code == EXIT_OK
    assert rendered.startswith("command: cosep")
    assert "  coseparable: pass" in rendered
    assert "certificate cointegral:" in rendered
    assert "time: " in rendered
    _, _, untimed = run("report", str(saved), "--text", "--no-time")
    assert "time: " not in untimed


def test_main_returns_exit_code(write):
    assert main(["validate", write(grouplike(3))]) == EXIT_OK
    assert main(["--help"]) == EXIT_OK
