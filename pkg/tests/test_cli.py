import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from qw.cli import main

SCHEMA = json.loads(resources.files("qw").joinpath("schemas/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "[L(2),W(-2)]_q")
    assert code == 0
    assert "*C" in out and "W(0)" in out


def test_eval_antipode(capsys):
    code, out, _ = run(capsys, "eval", "S(L(1))")
    assert code == 0 and out.strip() == "-(1/q^2)*T^-2*L(1)"


def test_eval_parse_error(capsys):
    code, out, err = run(capsys, "eval", "(")
    assert code == 2 and out == "" and "column 2" in err


def test_eval_json_validates(capsys):
    code, out, _ = run(capsys, "eval", "Delta(L(2))", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMA)


def test_eval_latex(capsys):
    code, out, _ = run(capsys, "eval", "Delta(L(3))", "--format", "latex")
    assert out.strip() == r"L_{3}\otimes\mathcal{T}^{3}+\mathcal{T}^{3}\otimes L_{3}"


def test_solve_cocycle(capsys):
    code, out, _ = run(capsys, "solve-cocycle", "--window", "3")
    assert code == 0
    assert "gauge-fixed dimension: 1" in out and "normalized: 1" in out


def test_solve_cocycle_window_too_small(capsys):
    code, _, err = run(capsys, "solve-cocycle", "--window", "1")
    assert code == 2 and "at least 2" in err


def test_solve_cocycle_json(capsys):
    code, out, _ = run(capsys, "solve-cocycle", "--window", "4", "--format", "json")
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert code == 0 and d["gauge_fixed_dimension"] == 1 and d["nullspace_dimension"] == 10


def test_verify_limit(capsys):
    code, out, _ = run(capsys, "verify", "limit", "--window", "10")
    assert code == 0
    assert "     2: 1/2" in out and "    10: 165/2" in out


@pytest.mark.parametrize("suite", ["jacobi", "cocycle", "limit"])
def test_verify_json_reports(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--window", "2", "--format", "json")
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert code == 0 and d["pass"] and d["checked"] == len(d["instances"])


def test_verify_relations_strict_names_c_t(capsys):
    code, out, _ = run(capsys, "verify", "relations", "--mode", "strict_paper", "--format", "json")
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert code == 1
    ce = d["counterexample"]
    assert ce["args"]["pair_kind"] == "CL" and ce["detail"]["relation"] == "C-T commutation"
    # stable across runs
    code2, out2, _ = run(capsys, "verify", "relations", "--mode", "strict_paper", "--format", "json")
    assert json.loads(out2)["counterexample"] == ce


def test_failed_verification_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "confluence", "--samples", "50", "--format", "json")
    d = json.loads(out)
    jsonschema.validate(d, SCHEMA)
    assert code == 1 and d["window"] == 3


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "eval")[0] == 2
    assert run(capsys, "verify", "limit", "--samples", "0")[0] == 2


def test_env_window(capsys, monkeypatch):
    monkeypatch.setenv("QW_DEFAULT_WINDOW", "2")
    code, out, _ = run(capsys, "verify", "limit", "--format", "json")
    assert json.loads(out)["window"] == 2
    monkeypatch.setenv("QW_DEFAULT_WINDOW", "two")
    assert run(capsys, "verify", "limit")[0] == 2


def test_deterministic(capsys):
    a = run(capsys, "verify", "hopf", "--window", "1", "--samples", "20", "--seed", "9", "--format", "json")[1]
    b = run(capsys, "verify", "hopf", "--window", "1", "--samples", "20", "--seed", "9", "--format", "json")[1]
    assert a == b


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "qw.cli", "eval", "eps(T^3)"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "1"
