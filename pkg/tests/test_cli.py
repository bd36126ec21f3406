import json
import subprocess
import sys

import pytest

from conftest import GOLDEN
from ivfss import run_fixture, serialize_json
from ivfss.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["apartments", "scenic"])
@pytest.mark.parametrize("fmt, suffix", [("text", "txt"), ("json", "json")])
def test_rank_golden(capsysbinary, name, fmt, suffix):
    assert main(["rank", "--fixture", name, "--format", fmt]) == 0
    out = capsysbinary.readouterr().out
    assert out == (GOLDEN / f"rank_{name}.{suffix}").read_bytes()


def test_energy_golden(capsysbinary):
    assert main(["energy", "--fixture", "houses"]) == 0
    assert capsysbinary.readouterr().out == (GOLDEN / "energy_houses.txt").read_bytes()


def test_rank_chosen(capsys):
    code, out, _ = run(capsys, "rank", "--fixture", "apartments")
    assert code == 0
    assert "u_4 > u_3 > u_2 > u_1 > u_5" in out
    assert "chosen: u_4" in out
    _, out, _ = run(capsys, "rank", "--fixture", "scenic")
    assert "chosen: u_12" in out


def test_energy_text(capsys):
    code, out, _ = run(capsys, "energy", "--fixture", "houses")
    assert code == 0
    # exact value 4.89412384 rounds to 4.894124 at 7 significant digits
    assert "E* = 4.894124\n" in out
    assert "E^min = 4.525428" in out
    assert "bound n*sqrt(m) = 12" in out
    assert "bounds hold: yes" in out


def test_energy_json_full_precision(capsys):
    code, out, _ = run(capsys, "energy", "--fixture", "houses", "--format", "json")
    doc = json.loads(out)
    assert float(doc["e_star"]) == pytest.approx(4.8941245, abs=5e-6)
    assert len(doc["spectrum_min"]) == 6
    assert doc["bounds_hold"] is True


def test_deterministic(capsysbinary):
    outs = []
    for _ in range(2):
        main(["compare", "--fixture", "scenic", "--format", "json"])
        outs.append(capsysbinary.readouterr().out)
    assert outs[0] == outs[1]


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--fixture", "apartments")
    assert code == 0
    assert "kendall tau-b vs MCTDM = 0.4" in out
    code, out, _ = run(capsys, "compare", "--fixture", "scenic", "--format", "json")
    doc = json.loads(out)
    assert [b["method"] for b in doc["baselines"]] == ["SBDM", "CAODM", "MCTDM"]
    assert doc["baselines"][2]["ranking"][8] == ["u_3", "u_5"]


def test_compare_without_baselines(capsys):
    code, out, _ = run(capsys, "compare", "--fixture", "houses")
    assert code == 0
    assert "no baseline rankings" in out


def test_validate_and_files(tmp_path, capsys):
    path = tmp_path / "apartments.json"
    path.write_bytes(serialize_json(run_fixture("apartments")))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0 and "5 objects x 4 parameters" in out
    code, out, _ = run(capsys, "validate", str(path), "--format", "json")
    assert json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "rank", str(path))
    assert "chosen: u_4" in out


def test_fixture_dump(capsys):
    code, out, _ = run(capsys, "fixture", "houses")
    assert code == 0 and out.startswith(",x_1,x_2,x_3,x_4\nu_1,0.7:0.9,")
    code, out, _ = run(capsys, "fixture", "apartments", "--format", "json")
    assert json.loads(out)["baselines"]["MCTDM"] == ["u_4", "u_3", "u_5", "u_1", "u_2"]


@pytest.mark.parametrize(
    "content, suffix, error",
    [
        ('{"name": "x", "objects": ["a"], "parameters": ["p"], "grid": [[[0.5, 0.3]]]}', "json", "Inverted"),
        ('{"name": "x", "objects": [], "parameters": ["p"], "grid": []}', "json", "EmptyUniverse"),
        ("{not json", "json", "MalformedSyntax"),
        ('{"objects": ["a"]}', "json", "SchemaViolation"),
        (",p\na,0.3;0.5\n", "csv", "MalformedCell"),
        (",p,q,r,s\na,0:1,0:1,0:1\n", "csv", "RaggedRow"),
    ],
)
@pytest.mark.parametrize("command", ["validate", "energy", "rank", "compare"])
def test_invalid_input_exit_1(tmp_path, capsys, content, suffix, error, command):
    path = tmp_path / f"bad.{suffix}"
    path.write_text(content)
    code, out, err = run(capsys, command, str(path))
    assert code == 1
    assert out == ""
    assert error in err


def test_error_names_cell(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text(",p,q\na,0:1,0:1\nb,0:1,0.9:0.2\n")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "(b, q)" in err and "line 3" in err


def test_single_object_rank_is_invalid(tmp_path, capsys):
    path = tmp_path / "one.csv"
    path.write_text(",p\na,0:1\n")
    assert run(capsys, "energy", str(path))[0] == 0
    code, _, err = run(capsys, "rank", str(path))
    assert code == 1 and "UniverseTooSmall" in err


def test_missing_file_and_unknown_fixture(tmp_path, capsys):
    assert run(capsys, "validate", str(tmp_path / "nope.json"))[0] == 1
    code, _, err = run(capsys, "fixture", "unknown")
    assert code == 1 and "UnknownFixture" in err


def test_numerical_failure_exit_3(capsys, monkeypatch):
    monkeypatch.setattr("ivfss.spectral.MAX_SWEEPS", 0)
    code, _, err = run(capsys, "energy", "--fixture", "houses")
    assert code == 3 and "NoConvergence" in err


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["rank"], ["rank", "x.json", "--fixture", "apartments"], ["rank", "--fixture", "apartments", "--tie-tol", "-1"],
     ["energy", "--fixture", "houses", "--format", "xml"]],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ivfss", "rank", "--fixture", "apartments"], capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "rank_apartments.txt").read_bytes()
