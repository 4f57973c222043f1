import json

import numpy as np
import pytest

from dirac1d.cli import main

C_DOUBLE = "[[[-0.5,0],[0,0]],[[0,0],[0.5,0]]]"
D_EYE = "[[[1,0],[0,0]],[[0,0],[1,0]]]"
C_ZERO = "[[[0,0],[0,0]],[[0,0],[0,0]]]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_admissible_command(capsys):
    code, out = run(capsys, "admissible", "--C", C_DOUBLE, "--D", D_EYE)
    payload = json.loads(out)
    assert code == 0
    assert payload["admissible"] is True
    assert payload["class"] == "invertible_d"


def test_admissible_rejects_bad_pair(capsys):
    bad_c = "[[[0,0],[0,1]],[[0,0],[0,0]]]"
    code, out = run(capsys, "admissible", "--C", bad_c, "--D", D_EYE)
    assert code == 0  # negative finding, not an error
    assert json.loads(out)["admissible"] is False


def test_eigs_command(capsys):
    code, out = run(capsys, "eigs", "--verify", "--C", C_DOUBLE, "--D", D_EYE)
    payload = json.loads(out)
    assert code == 0
    assert payload["count"] == 2
    assert payload["oracle_agreement"] is True
    assert payload["eigenvalues"][0]["lambda"] == pytest.approx(0.0, abs=1e-8)


def test_levinson_command(capsys):
    code, out = run(capsys, "levinson", "--C", C_DOUBLE, "--D", D_EYE)
    payload = json.loads(out)
    assert code == 0
    assert payload["winding"] == -2
    assert payload["holds"] is True


def test_sweep_command(capsys):
    code, out = run(capsys, "sweep", "--count", "5", "--seed", "42")
    payload = json.loads(out)
    assert code == 0
    assert payload["total"] == 5
    assert payload["failures"] == []
    assert len(payload["results"]) + len(payload["degenerate_skipped"]) == 5


def test_smatrix_csv(capsys):
    code, out = run(capsys, "smatrix", "--points", "5", "--C", C_ZERO, "--D", D_EYE)
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0].startswith("branch,s,lambda,ReT0_11")
    assert len(lines) == 1 + 2 * 5
    # S = -1 for this pair: ReS_11 column
    cols = lines[0].split(",")
    row = lines[1].split(",")
    assert float(row[cols.index("ReS_11")]) == pytest.approx(-1.0, abs=1e-10)
    assert float(row[cols.index("unitarity_defect")]) < 1e-10


def test_green_command(capsys):
    code, out = run(capsys, "green", "--x", "0.5", "--y", "-0.3", "--z", "[0.2,0.4]",
                    "--C", C_DOUBLE, "--D", D_EYE)
    payload = json.loads(out)
    assert code == 0
    assert np.array(payload["green"]).shape == (2, 2, 2)


def test_waveop_command(capsys):
    code, out = run(capsys, "waveop", "--N", "256", "--trace", "--C", C_ZERO, "--D", D_EYE)
    payload = json.loads(out)
    assert code == 0
    assert payload["defect"] < 1e-10
    assert payload["bound_state_trace"]["exploratory"] is True


def test_parse_error_exit_code(capsys):
    assert main(["eigs", "--C", "not json", "--D", D_EYE]) == 2


def test_invalid_input_exit_code(capsys):
    bad_c = "[[[0,0],[0,1]],[[0,0],[0,0]]]"
    assert main(["eigs", "--C", bad_c, "--D", D_EYE]) == 3


def test_out_file_and_determinism(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code = main(["sweep", "--count", "4", "--seed", "7", "--out", str(path)])
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_global_flags_accepted_before_subcommand(capsys):
    code, out = run(capsys, "--seed", "7", "sweep", "--count", "2")
    assert code == 0
    assert json.loads(out)["total"] == 2
