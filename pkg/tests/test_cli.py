import json

import pytest

import src.main as cli
from src.verify.acceptance import AcceptanceResult, SuiteReport


def invoke(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def error_of(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


def test_tau_json(capsys):
    code, out, _ = invoke(capsys, "tau", "--char", "3", "--vars", "x", "--f", "x", "--t", "3/2", "--twist", "1")
    assert code == 0
    assert json.loads(out) == {
        "basis": ["x"],
        "ring": {"char": 3, "filtvar": "x", "vars": ["x"]},
        "shift": 0,
    }


def test_tau_tsv(capsys):
    code, out, _ = invoke(capsys, "tau", "--char", "5", "--f", "x", "--t", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["shift\tgenerator", "0\tx^2"]


def test_tau_on_model_at_negative_parameter(capsys):
    code, out, _ = invoke(capsys, "tau", "--char", "3", "--f", "x", "--t=-1/2", "--model")
    assert code == 0
    data = json.loads(out)
    assert (data["shift"], data["basis"]) == (1, ["1"])


def test_tau_in_two_variables(capsys):
    code, out, _ = invoke(capsys, "tau", "--char", "3", "--vars", "x,y", "--f", "x*y", "--t", "1")
    assert code == 0
    assert json.loads(out)["basis"] == ["x*y"]


def test_jumps_and_fpt(capsys):
    code, out, _ = invoke(capsys, "jumps", "--char", "3", "--f", "x^2", "--interval", "0,1")
    assert code == 0
    assert json.loads(out)["jumps"] == ["1/2"]
    code, out, _ = invoke(capsys, "fpt", "--char", "3", "--f", "x^2")
    assert code == 0
    assert json.loads(out) == {"f": "x^2", "fpt": "1/2"}


def test_graded_piece(capsys):
    code, out, _ = invoke(capsys, "gr", "--char", "3", "--f", "x", "--t", "1")
    assert code == 0
    data = json.loads(out)
    assert data["twist_exponent"] == 2
    assert data["denominator"]["basis"] == ["x"]
    assert data["zero"] is False


def test_vfilt_table(capsys):
    code, out, _ = invoke(capsys, "vfilt", "--char", "3", "--n", "2", "--s", "1", "--window=-1,2")
    assert code == 0
    data = json.loads(out)
    assert data["jumps"] == ["-1/2", "1/2", "3/2"]
    assert data["pieces"][0]["basis"] == ["1"]


def test_axioms_report_is_not_an_error(capsys):
    code, out, _ = invoke(capsys, "axioms", "--char", "3", "--table", "graph", "--s", "1")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is False
    assert any(e["axiom"] == "iii" and e["witness"] == "x^3" for e in data["entries"])


def test_counterexample(capsys):
    code, out, _ = invoke(capsys, "counterexample", "--char", "3", "--s", "1")
    assert code == 0
    assert json.loads(out)["verdict"] == "NON-MEMBER witness x^3"
    code, out, _ = invoke(capsys, "counterexample", "--char", "5", "--s", "1", "--format", "tsv")
    assert out.splitlines() == ["p\ts\tverdict", "5\t1\tNON-MEMBER witness x^5"]


def test_level_budget_exit_code(capsys):
    code, _, err = invoke(capsys, "tau", "--char", "3", "--f", "x", "--t", "1/7", "--budget", "2")
    assert code == 2
    assert error_of(err)["error"] == "LevelBoundError"


@pytest.mark.parametrize(
    "argv,error",
    [
        (["tau", "--char", "3", "--f", "x"], "UsageError"),
        (["solve", "--char", "3"], "UsageError"),
        (["tau", "--char", "3", "--f", "x", "--t", "1", "--format", "xml"], "UsageError"),
        (["tau", "--char", "4", "--f", "x", "--t", "1"], "RingSpecError"),
        (["tau", "--char", "3", "--f", "x", "--t", "0.5"], "InputError"),
        (["tau", "--char", "3", "--f", "z", "--t", "1"], "UnknownVariableError"),
        (["tau", "--char", "3", "--f", "x", "--t", "1", "--emax", "0"], "UsageError"),
        (["compare", "--char", "3", "--n", "2", "--window=-2,1"], "InputError"),
    ],
)
def test_usage_and_input_errors(capsys, argv, error):
    code, out, err = invoke(capsys, *argv)
    assert code == 1
    assert out == ""
    assert error_of(err)["error"] == error


def test_parse_error_carries_position(capsys):
    code, _, err = invoke(capsys, "tau", "--char", "3", "--f", "2x", "--t", "1")
    assert code == 1
    assert error_of(err) == {
        "error": "PolynomialParseError",
        "message": "unexpected 'x' at position 1",
        "position": 1,
    }


def test_verify_paper_failure_exit_code(capsys, monkeypatch):
    failing = SuiteReport(
        [AcceptanceResult(id=1, anchor="roots", char=3, status="fail", detail="mismatch")]
    )
    monkeypatch.setattr(cli, "run_suite", lambda char=None: failing)
    code, out, _ = invoke(capsys, "verify-paper", "--char", "3")
    assert code == 3
    data = json.loads(out)
    assert data["passed"] is False
    assert data["results"] == [
        {"id": 1, "anchor": "roots", "char": 3, "status": "fail", "detail": "mismatch"}
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ("tau", "--char", "3", "--vars", "x,y", "--f", "x^2*y", "--t", "2/3"),
        ("jumps", "--char", "5", "--f", "x^2", "--interval", "0,2", "--format", "tsv"),
        ("vfilt", "--char", "5", "--n", "4", "--s", "3"),
        ("counterexample", "--char", "7", "--s", "2"),
    ],
)
def test_repeated_runs_print_identical_bytes(capsys, argv):
    first = invoke(capsys, *argv)
    second = invoke(capsys, *argv)
    assert first[0] == 0
    assert first[:2] == second[:2]
