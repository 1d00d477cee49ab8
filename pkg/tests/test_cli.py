import json
import subprocess
import sys

import pytest

from kronstab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_reduced(capsys):
    assert run(capsys, "reduced", "2", "2", "2")[:2] == (0, "2")
    code, out, _ = run(capsys, "reduced", "[2]", "[2]", "[2]", "--method", "littlewood", "--json")
    assert code == 0 and json.loads(out) == {"value": 2, "method": "littlewood"}


def test_stab(capsys):
    assert run(capsys, "stab", "2", "2")[:2] == (0, "formula=8 empirical=8")
    code, out, _ = run(capsys, "stab", "2", "2", "--json")
    assert json.loads(out) == {"formula": 8, "empirical": 8}


def test_coeff(capsys):
    assert run(capsys, "coeff", "[]", "[]", "[]")[:2] == (0, "1")
    assert run(capsys, "coeff", "3,3", "3,3", "3,3")[:2] == (0, "0")
    assert run(capsys, "coeff", "2", "1", "1")[:2] == (0, "0")


def test_product_text_and_json_agree(capsys):
    code, text, _ = run(capsys, "product", "2,2", "2,2")
    assert code == 0 and text == "s_{4} + s_{2,2} + s_{1,1,1,1}"
    code, out, _ = run(capsys, "product", "2,2", "2,2", "--json")
    data = json.loads(out)
    assert data == [{"partition": [4], "coeff": 1}, {"partition": [2, 2], "coeff": 1},
                    {"partition": [1, 1, 1, 1], "coeff": 1}]


def test_support(capsys):
    code, out, _ = run(capsys, "support", "1", "1", "--json")
    data = json.loads(out)
    assert data["degree"] == 4
    assert {tuple(d["partition"]): d["coeff"] for d in data["support"]} == {
        (): 1, (1,): 1, (1, 1): 1, (2,): 1}
    code, text, _ = run(capsys, "support", "2", "2")
    assert "2\t2,1" in text.splitlines()
    assert "1\t[]" in text.splitlines()


def test_bounds(capsys):
    code, text, _ = run(capsys, "bounds", "3,2", "2,2,1", "2,2")
    assert code == 0
    assert text == "reduced=16 stab=10 N1=11 N2=10 NB=11 NV=11"
    code, out, _ = run(capsys, "bounds", "3,2", "2,2,1", "2,2", "--json")
    data = json.loads(out)
    assert (data["stab"], data["N1"], data["N2"], data["NB"], data["NV"]) == (10, 11, 10, 11, 11)
    assert data["triple"] == [[3, 2], [2, 2, 1], [2, 2]]


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-weight", "4")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "intro", "--json")
    data = json.loads(out)
    assert data["failed"] == 0 and all(r["passed"] for r in data["results"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    from kronstab import verify

    monkeypatch.setitem(verify.SUITES, "intro", [("broken", lambda w: (False, "forced"))])
    code, out, _ = run(capsys, "verify", "--suite", "intro")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["product", "2", "1"],
    ["verify", "--max-weight", "-1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["coeff", "1,2", "1", "1"],
    ["stab", "x", "1"],
    ["reduced", "1", "1"],
    ["frobnicate"],
])
def test_parse_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "reduced", "2", "2", "4", "--json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"value": 1, "method": "stable"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kronstab", "stab", "1", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "formula=4 empirical=4"
