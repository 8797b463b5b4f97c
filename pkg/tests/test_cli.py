import json
import subprocess
import sys
from pathlib import Path

import pytest

from taqcalc import cli

GOLDEN = Path(__file__).parent / "golden"
S1 = str(GOLDEN / "S1.json")
P3 = str(GOLDEN / "P3.json")

# one configuration per subcommand; the golden file holds the exact bytes
CONFIGS = {
    "basis": ["basis", "--p", "2", "--input", S1, "--max-degree", "4"],
    "apply-q": ["apply-q", "--input", P3, "--max-degree", "20", "--op", "1,2", "--target", "x1"],
    "delta": ["delta", "--input", P3, "--max-degree", "12", "--element", "x1*x2 + x2 + Q[0,2].x2"],
    "theta-prime": ["theta-prime", "--spectrum", "MO", "--max-n", "16"],
    "sym-homology": ["sym-homology", "--p", "3", "--degrees", "0,1", "--r-max", "8"],
    "double-cosets": ["double-cosets", "--m", "2", "--n", "2"],
    "indecomposables": ["indecomposables", "--p", "3", "--max-degree", "60"],
    "kriz-dims": ["kriz-dims", "--max-degree", "24"],
    "obstruction": ["obstruction", "--which", "cp-ku", "--p", "3", "--max-degree", "24"],
    "theta-prime-csv": ["theta-prime", "--spectrum", "MU", "--p", "3", "--max-n", "12", "--format", "csv"],
}


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def golden_path(name):
    return GOLDEN / (name + (".csv" if name.endswith("csv") else ".json"))


@pytest.mark.parametrize("name", sorted(CONFIGS))
def test_golden_bytes(name, capsys):
    code, out, _ = run(CONFIGS[name], capsys)
    assert code == 0
    assert out.encode() == golden_path(name).read_bytes()
    again = run(CONFIGS[name], capsys)[1]
    assert again == out


@pytest.mark.parametrize("name", sorted(k for k in CONFIGS if not k.endswith("csv")))
def test_outputs_match_schemas(name, capsys):
    _, out, _ = run(CONFIGS[name], capsys)
    doc = json.loads(out)
    cli.check_output(doc)


def test_schemas_are_valid():
    import jsonschema
    for path in sorted((Path(cli.__file__).parent / "schemas").glob("*.json")):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_documented_examples(capsys):
    _, out, _ = run(CONFIGS["basis"], capsys)
    assert json.loads(out)["hilbert"] == [1, 1, 1, 2, 3]
    _, out, _ = run(["theta-prime", "--spectrum", "MO", "--n", "2", "--unicode"], capsys)
    assert json.loads(out)["rows"][0]["image"] == "Σ⁻¹ζ₂"
    _, out, _ = run(["theta-prime", "--spectrum", "MO", "--n", "2"], capsys)
    assert json.loads(out)["rows"][0]["image"] == "S^-1 z2"
    _, out, _ = run(CONFIGS["double-cosets"], capsys)
    assert json.loads(out)["representatives"] == ["id", "(2 4)"]


def test_csv_header_and_rows(capsys):
    _, out, _ = run(["kriz-dims", "--max-degree", "9", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert lines[0] == "degree,dim"
    assert lines[1:] == [f"{d},{n}" for d, n in enumerate([0, 1, 0, 0, 0, 1, 1, 1, 1, 1])]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(CONFIGS["double-cosets"] + ["--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_bytes() == golden_path("double-cosets").read_bytes()


def test_schema_violation_reports_pointer(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": "F4", "classes": [{"name": "x", "degree": -1}]}))
    code, _, err = run(["basis", "--input", str(bad), "--max-degree", "3"], capsys)
    assert code == 2
    assert "/classes/0/degree" in err and "/field" in err


@pytest.mark.parametrize("argv", [
    ["basis", "--input", "/nonexistent.json", "--max-degree", "3"],
    ["basis", "--p", "3", "--input", S1, "--max-degree", "3"],
    ["apply-q", "--input", S1, "--max-degree", "8", "--op", "x", "--target", "s1"],
    ["apply-q", "--input", S1, "--max-degree", "8", "--op", "2", "--target", "nope"],
    ["delta", "--input", S1, "--max-degree", "8", "--element", "y1"],
    ["theta-prime", "--spectrum", "MO", "--n", "7"],
    ["theta-prime", "--spectrum", "MU"],
    ["sym-homology", "--p", "4", "--degrees", "0"],
    ["double-cosets", "--m", "5", "--n", "4"],
    ["indecomposables", "--max-degree", "1"],
    ["kriz-dims", "--max-degree", "100000"],
])
def test_validation_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == "" and err.startswith("error:")


def test_degree_cap_env(monkeypatch, capsys):
    monkeypatch.setenv(cli.CAP_ENV, "10")
    assert run(["kriz-dims", "--max-degree", "11"], capsys)[0] == 2
    assert run(["kriz-dims", "--max-degree", "10"], capsys)[0] == 0
    monkeypatch.setenv(cli.CAP_ENV, "600")
    assert run(["kriz-dims", "--max-degree", "513"], capsys)[0] == 0
    monkeypatch.setenv(cli.CAP_ENV, "many")
    assert run(["kriz-dims", "--max-degree", "5"], capsys)[0] == 2


def test_internal_error_exit_1(monkeypatch, capsys):
    def boom(*args):
        raise ZeroDivisionError("boom")
    monkeypatch.setattr(cli.spectra, "kriz_taq_dimensions", boom)
    code, _, err = run(["kriz-dims", "--max-degree", "5"], capsys)
    assert code == 1 and "internal error" in err


def test_console_script_subprocess():
    out = subprocess.run([sys.executable, "-m", "taqcalc.cli", *CONFIGS["double-cosets"]],
                         capture_output=True, check=True)
    assert out.stdout == golden_path("double-cosets").read_bytes()


if __name__ == "__main__":
    # regenerate the golden files: python tests/test_cli.py
    import contextlib
    import io
    for name, argv in CONFIGS.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert cli.main(argv) == 0
        golden_path(name).write_bytes(buf.getvalue().encode())
