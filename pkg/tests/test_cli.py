import json
import subprocess
import sys

import pytest

from coxhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


def test_info(capsys):
    code, data, _ = run_json(capsys, "info", "A2")
    assert code == 0
    assert data["rank"] == 2 and data["finite"] and data["order"] == 6
    assert {p["subset"]: p["finite"] for p in data["parabolics"]} == {"[]": True, "[s]": True, "[t]": True, "[s,t]": True}
    code, data, _ = run_json(capsys, "info", "Atilde1")
    assert code == 0 and data["finite"] is False and data["order"] is None


def test_input_sources(capsys, tmp_path):
    path = tmp_path / "sys.json"
    path.write_text('{"labels": [[1, 4], [4, 1]]}')
    assert run_json(capsys, "info", "--input", str(path))[1]["order"] == 8
    assert run_json(capsys, "info", "-i", '{"type": "H3"}')[1]["order"] == 120
    assert run_json(capsys, "info", "--type", "I2(7)")[1]["order"] == 14


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "--input", "{bad json"],
        ["info", "--input", '{"labels": [[1, 2], [3, 1]]}'],
        ["info", "Z5"],
        ["info"],
        ["info", "A2", "--type", "A3"],
        ["hecke", "A2", "T[x]", "T[s]"],
        ["hecke", "A2", "T[s]"],
        ["deodhar", "A2", "--radius", "2"],
        ["deodhar", "A3", "--order", "s,t"],
        ["deodhar", "Atilde1", "--radius", "5", "--coradius", "3"],
        ["euler", "A2", "--at", "x/y"],
        ["poincare", "A2", "--max-length", "-1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = None
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse-level errors
        code = exc.code
    assert code == 2


def test_deodhar_finite_with_radius_message(capsys):
    code, _, err = run(capsys, "deodhar", "A2", "--radius", "2")
    assert code == 2 and "use complete mode" in err


def test_poincare(capsys):
    code, data, _ = run_json(capsys, "poincare", "A2")
    assert code == 0 and data["poincare"] == {"num": ["1", "2", "2", "1"], "den": ["1"]}
    code, data, _ = run_json(capsys, "poincare", "Atilde1", "--max-length", "8")
    assert code == 0 and data["match"] is True
    assert data["series"] == ["1"] + ["2"] * 8
    code, data, _ = run_json(capsys, "poincare", "I2(7)")
    assert data["poincare"]["num"] == ["1"] + ["2"] * 6 + ["1"]


def test_hecke(capsys):
    code, data, _ = run_json(capsys, "hecke", "A2", "T[s]", "T[s]")
    assert code == 0
    assert data["product"] == "q*T[] + (q-1)*T[s]"
    assert data["eps_q"] == ["0", "0", "1"]
    assert data["eps_sign"] == ["1"]
    assert data["trace"] == ["0", "1"]
    code, data, _ = run_json(capsys, "hecke", "B2", "T[]", "(q-1)*T[s,t] + q*T[]")
    assert data["product"] == "q*T[] + (q-1)*T[s,t]"


def test_hecke_radius_guard(capsys):
    code, _, err = run(capsys, "hecke", "Atilde1", "--max-length", "2", "T[s,t]", "T[s,t]")
    assert code == 3 and "required radius 4" in err


def test_deodhar(capsys):
    code, data, _ = run_json(capsys, "deodhar", "B2")
    assert code == 0
    assert data["homology"] == [1, 1] and data["actions"] == {"0": "q", "top": "-1"}
    code, data, _ = run_json(capsys, "deodhar", "Atilde2", "--radius", "3", "--coradius", "5")
    assert code == 0 and data["certified"] is True
    code, data, _ = run_json(capsys, "deodhar", "A3", "--order", "u,s,t")
    assert code == 0 and data["homology"] == [1, 0, 1]


def test_euler(capsys):
    code, data, _ = run_json(capsys, "euler", "H3")
    assert code == 0 and data["product_ok"] is True
    code, data, _ = run_json(capsys, "euler", "Atilde1", "--at", "1")
    assert code == 0
    assert data["specializations"]["1"] == "0"
    assert data["poincare_specializations"]["1"] == "pole at 1"
    assert set(data["per_parabolic"]) == {"[]", "[s]", "[t]"}
    code, data, _ = run_json(capsys, "euler", "A2", "--at", "-1", "--at", "2")
    assert code == 0
    assert data["specializations"]["-1"].startswith("skipped")
    assert "not invertible" in data["specializations"]["-1"]
    assert data["specializations"]["2"] == "1/21"  # 1 + 4 + 8 + 8


def test_verify(capsys):
    code, data, _ = run_json(capsys, "verify", "A2")
    assert code == 0 and data["ok"]
    code7, data7, _ = run_json(capsys, "verify", "B2", "--seed", "7")
    code0, data0, _ = run_json(capsys, "verify", "B2")
    assert code7 == code0 == 0 and data7 == data0
    code, data, _ = run_json(capsys, "verify", "Atilde1", "--max-length", "6", "--samples", "200")
    assert code == 0 and data["ok"]
    suites = {s["name"]: s for s in data["suites"]}
    assert suites["hecke"]["passed"] > 0 and suites["bilinear form"]["passed"] == 200


@pytest.mark.parametrize("argv", [["euler", "Hyp334", "--at", "2"], ["verify", "Atilde1", "--seed", "3"], ["deodhar", "Atilde1"]])
def test_json_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv, "--format", "json")
    second = run(capsys, *argv, "--format", "json")
    assert first == second


def test_text_mode_carries_the_same_numbers(capsys):
    _, text, _ = run(capsys, "hecke", "A2", "T[s,t]", "T[t,s]")
    _, data, _ = run_json(capsys, "hecke", "A2", "T[s,t]", "T[t,s]")
    assert data["product"] in text


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "coxhecke", "info", "A1"], capture_output=True, text=True)
    assert out.returncode == 0 and "|W| = 2" in out.stdout
