"""Command-line behavior: reports, exit codes, file handling."""

import json
import math

import numpy as np
import pytest

from signpoly import stateio, traceless_hermitian_basis
from signpoly.cli import main

MIXED_2 = np.eye(2, dtype=complex) / 2


@pytest.fixture
def w_example_file(tmp_path):
    amps = np.zeros(8, dtype=complex)
    amps[0] = 0.758j
    amps[2] = 0.809 - 0.588j
    amps[5] = 0.809 + 0.588j
    amps[7] = 0.242
    path = tmp_path / "w.json"
    stateio.save_document(path, stateio.state_document(8, amplitudes=amps))
    return str(path)


@pytest.fixture
def ghz_file(tmp_path):
    amps = np.zeros(8)
    amps[0] = amps[7] = 1.0 / math.sqrt(2.0)
    path = tmp_path / "ghz.json"
    stateio.save_document(path, stateio.state_document(8, amplitudes=amps))
    return str(path)


@pytest.fixture
def octahedral_file(tmp_path):
    basis = traceless_hermitian_basis(2)
    members = [MIXED_2 + s * 0.4 * basis[k] for k in range(3) for s in (1, -1)]
    path = tmp_path / "oct.json"
    stateio.save_document(path, stateio.decomposition_document(
        2, MIXED_2, members, [1 / 6] * 6))
    return str(path)


def _state_file(tmp_path, name, matrix):
    path = tmp_path / name
    stateio.save_document(path, stateio.state_document(len(matrix), matrix=matrix))
    return str(path)


def _parse_text(out):
    parsed = {}
    for line in out.strip().splitlines():
        key, _, value = line.partition(": ")
        parsed[key] = value
    return parsed


# -------------------------------------------------------------- state files

class TestStateIO:
    def test_state_round_trip(self, tmp_path):
        M = MIXED_2 + 0.3 * traceless_hermitian_basis(2)[1]
        path = tmp_path / "s.json"
        stateio.save_document(path, stateio.state_document(2, matrix=M))
        loaded = stateio.load_state(path)
        np.testing.assert_allclose(loaded.matrix, M, atol=1e-15)
        assert loaded.amplitudes is None

    def test_amplitudes_normalized_on_load(self, tmp_path):
        path = tmp_path / "s.json"
        stateio.save_document(path, stateio.state_document(
            2, amplitudes=np.array([3.0, 4.0])))
        loaded = stateio.load_state(path)
        assert loaded.norm == pytest.approx(5.0)
        np.testing.assert_allclose(loaded.amplitudes, [0.6, 0.8])

    def test_decomposition_round_trip(self, tmp_path, octahedral_file):
        loaded = stateio.load_decomposition(octahedral_file)
        assert loaded.dim == 2
        assert len(loaded.members) == 6
        assert sum(loaded.weights) == pytest.approx(1.0)
        np.testing.assert_allclose(loaded.target.matrix, MIXED_2, atol=1e-15)

    @pytest.mark.parametrize("doc", [
        {},                                                   # no schema
        {"schema": 2, "kind": "state", "dim": 2},             # wrong version
        {"schema": 1, "kind": "state", "dim": 1,
         "matrix": [[1.0, 0.0]]},                             # dim too small
        {"schema": 1, "kind": "state", "dim": 2},             # no payload
        {"schema": 1, "kind": "state", "dim": 2,
         "matrix": [[1, 0]] * 4, "amplitudes": [[1, 0]] * 2},  # both payloads
        {"schema": 1, "kind": "state", "dim": 2,
         "matrix": [[1.0, 0.0]] * 3},                         # wrong length
        {"schema": 1, "kind": "state", "dim": 2,
         "amplitudes": [[1.0], [0.0]]},                       # malformed pair
        {"schema": 1, "kind": "decomposition", "dim": 2},     # wrong kind
    ])
    def test_malformed_state_documents(self, tmp_path, doc):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(stateio.FileFormatError):
            stateio.load_state(path)

    def test_not_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        with pytest.raises(stateio.FileFormatError):
            stateio.load_state(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(stateio.FileFormatError):
            stateio.load_state(tmp_path / "absent.json")


# ----------------------------------------------------------------- commands

def test_enumerate_w_pipeline(capsys, w_example_file):
    rc = main(["enumerate", w_example_file, "--filter", "w-type"])
    assert rc == 0
    parsed = _parse_text(capsys.readouterr().out)
    assert parsed["total"] == "26880"
    assert parsed["retained"] == "5376"
    assert float(parsed["input_norm"]) ** 2 == pytest.approx(2.633578, abs=1e-9)


def test_enumerate_structured_matches_text(capsys, ghz_file):
    rc = main(["enumerate", ghz_file, "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    rc = main(["enumerate", ghz_file])
    assert rc == 0
    text = _parse_text(capsys.readouterr().out)
    for key, value in doc.items():
        if isinstance(value, bool):
            assert text[key] == ("true" if value else "false")
        elif isinstance(value, float):
            assert float(text[key]) == value
        elif isinstance(value, int):
            assert int(text[key]) == value
        else:
            assert text[key] == str(value)


def test_enumerate_show_states(capsys, ghz_file):
    rc = main(["enumerate", ghz_file, "--format", "structured", "--show", "3"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["states"]) == 3
    amp = np.array([complex(re, im) for re, im in doc["states"][0]])
    assert np.linalg.norm(amp) == pytest.approx(1.0)


def test_enumerate_bloch_target(capsys, tmp_path):
    path = _state_file(tmp_path, "zero.json", np.diag([1.0, 0.0]))
    rc = main(["enumerate", path, "--target", "bloch"])
    assert rc == 0
    parsed = _parse_text(capsys.readouterr().out)
    assert parsed["total"] == "6"
    assert parsed["retained"] == "6"


def test_enumerate_cap_flag(w_example_file):
    assert main(["enumerate", w_example_file, "--cap", "100"]) == 3


def test_enumerate_cap_env(w_example_file, monkeypatch):
    monkeypatch.setenv("SIGNPOLY_CAP", "100")
    assert main(["enumerate", w_example_file]) == 3
    # an explicit flag wins over the environment
    assert main(["enumerate", w_example_file, "--cap", "30000"]) == 0


def test_enumerate_bad_cap_env(w_example_file, monkeypatch, capsys):
    monkeypatch.setenv("SIGNPOLY_CAP", "many")
    assert main(["enumerate", w_example_file]) == 2
    assert "SIGNPOLY_CAP" in capsys.readouterr().err


def test_construct_octahedral(capsys, octahedral_file):
    rc = main(["construct", octahedral_file, "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["alpha"] == pytest.approx(0.4, abs=1e-6)
    assert doc["degenerate"] is False
    assert doc["vertex_states_valid"] == 6
    assert doc["fraction_closed_form"] == pytest.approx(
        8 * 0.4 ** 3 / math.pi, rel=1e-6)
    assert doc["fraction_volume_ratio"] == pytest.approx(
        doc["fraction_closed_form"], rel=1e-10)


def test_construct_verify_probes(capsys, octahedral_file):
    rc = main(["construct", octahedral_file, "--verify-probes", "25",
               "--seed", "11", "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["probes_checked"] == 25
    assert doc["probes_inside"] == 25
    assert doc["seed"] == 11


def test_construct_too_few_members(tmp_path, capsys):
    basis = traceless_hermitian_basis(2)
    members = [MIXED_2 + s * 0.4 * basis[0] for s in (1, -1)]
    path = tmp_path / "thin.json"
    stateio.save_document(path, stateio.decomposition_document(
        2, MIXED_2, members, [0.5, 0.5]))
    assert main(["construct", str(path)]) == 2
    assert "members" in capsys.readouterr().err


def test_construct_degenerate(tmp_path, capsys):
    basis = traceless_hermitian_basis(2)
    edge = MIXED_2 + 0.2 * basis[0]
    path = tmp_path / "deg.json"
    stateio.save_document(path, stateio.decomposition_document(
        2, edge, [edge] * 4, [0.25] * 4))
    rc = main(["construct", str(path), "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["degenerate"] is True
    assert doc["alpha"] == 0.0


def test_check_member_and_nonmember(tmp_path, capsys):
    basis = traceless_hermitian_basis(2)
    center = _state_file(tmp_path, "center.json", MIXED_2)
    inside = _state_file(tmp_path, "in.json", MIXED_2 + 0.1 * basis[0])
    outside = _state_file(tmp_path, "out.json", MIXED_2 + 0.3 * basis[0])

    assert main(["check", center, inside, "--alpha", "0.2"]) == 0
    parsed = _parse_text(capsys.readouterr().out)
    assert parsed["member"] == "true"
    assert float(parsed["coord_distance_1norm"]) == pytest.approx(0.1, abs=1e-12)

    assert main(["check", center, outside, "--alpha", "0.2"]) == 1
    parsed = _parse_text(capsys.readouterr().out)
    assert parsed["member"] == "false"
    assert float(parsed["fraction_closed_form"]) == pytest.approx(
        8 * 0.2 ** 3 / math.pi, rel=1e-12)


def test_check_dimension_mismatch(tmp_path):
    a = _state_file(tmp_path, "a.json", MIXED_2)
    b = _state_file(tmp_path, "b.json", np.eye(3) / 3)
    assert main(["check", a, b, "--alpha", "0.1"]) == 2


def test_check_rejects_invalid_state(tmp_path):
    a = _state_file(tmp_path, "a.json", MIXED_2)
    bad = _state_file(tmp_path, "bad.json", np.diag([1.4, -0.4]))
    assert main(["check", a, bad, "--alpha", "0.1"]) == 2


def test_volume_report(capsys):
    rc = main(["volume", "--dim", "2", "--alpha", "0.4", "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["hs_volume"] == pytest.approx(math.pi / 6.0, rel=1e-12)
    assert doc["cross_volume"] == pytest.approx(0.8 ** 3 / 6.0, rel=1e-12)
    assert doc["insphere_radius"] == pytest.approx(0.4 / math.sqrt(3), rel=1e-12)
    assert doc["fraction_closed_form"] == pytest.approx(
        doc["fraction_volume_ratio"], rel=1e-10)


def test_volume_without_alpha(capsys):
    assert main(["volume", "--dim", "3"]) == 0
    parsed = _parse_text(capsys.readouterr().out)
    assert "hs_volume" in parsed
    assert "cross_volume" not in parsed


def test_volume_validation():
    assert main(["volume", "--dim", "1"]) == 2
    assert main(["volume", "--dim", "2", "--alpha", "-1"]) == 2


def test_tangle_ghz(capsys, ghz_file):
    rc = main(["tangle", ghz_file])
    assert rc == 0
    parsed = _parse_text(capsys.readouterr().out)
    assert float(parsed["tau3"]) == pytest.approx(1.0, abs=1e-10)


def test_tangle_of_example_state(capsys, w_example_file):
    rc = main(["tangle", w_example_file])
    assert rc == 0
    parsed = _parse_text(capsys.readouterr().out)
    # the example state itself carries sizable three-way entanglement;
    # only the filtered family members are tangle-free
    assert float(parsed["tau3"]) == pytest.approx(0.5963890504334584, rel=1e-9)


def test_tangle_wrong_dimension(tmp_path):
    path = _state_file(tmp_path, "qubit.json", np.diag([1.0, 0.0]))
    assert main(["tangle", path]) == 2


def test_malformed_file_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("[1, 2, 3]")
    assert main(["tangle", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_tolerance_flags(ghz_file):
    assert main(["tangle", ghz_file, "--tol", "-1"]) == 2


def test_python_dash_m_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "signpoly", "volume", "--dim", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "hs_volume" in proc.stdout
