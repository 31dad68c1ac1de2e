import json
from importlib import resources

import jsonschema
import numpy as np
import pytest

from braidphase import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def load_schema():
    path = resources.files("braidphase").joinpath("schemas/run_report.schema.json")
    return json.loads(path.read_text())


def validate(payload):
    jsonschema.validate(instance=payload, schema=load_schema())


class TestVerifyAlgebra:
    def test_passes_and_validates(self, capsys):
        code, out, _ = run(capsys, "verify-algebra", "--phi-samples", "5", "--seed", "1")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        assert payload["passed"] is True
        assert payload["residual_summary"]["mbb_square"] <= 1e-10

    def test_deterministic_bytes(self, capsys):
        _, first, _ = run(capsys, "verify-algebra", "--phi-samples", "4", "--seed", "3")
        _, second, _ = run(capsys, "verify-algebra", "--phi-samples", "4", "--seed", "3")
        assert first == second

    def test_unattainable_tolerance_fails(self, capsys):
        code, out, _ = run(capsys, "verify-algebra", "--phi-samples", "3",
                           "--tol", "1e-300")
        assert code == 1
        payload = json.loads(out)
        validate(payload)
        assert payload["passed"] is False


class TestYbe:
    def test_report(self, capsys):
        code, out, _ = run(capsys, "ybe", "--samples", "3", "--phi-samples", "2",
                           "--seed", "5")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        assert payload["residual_summary"]["two_qubit_rational_max"] <= 1e-10
        # measured, reported, never gated
        assert payload["residual_summary"]["three_qubit_rational_max"] > 0.0
        assert list(payload["passes"]) == ["two_qubit_rational"]


class TestEntangle:
    def test_ghz_point(self, capsys):
        code, out, _ = run(capsys, "entangle", "--theta", "0.5235987755982988",
                           "--phi", "0", "--input", "000")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        assert payload["results"]["tau_abc"] == pytest.approx(1.0, abs=1e-9)
        assert payload["results"]["c_ab"] == pytest.approx(0.0, abs=1e-9)

    def test_degrees_flag(self, capsys):
        code, out, _ = run(capsys, "entangle", "--theta", "30", "--degrees")
        assert code == 0
        assert json.loads(out)["results"]["tau_abc"] == pytest.approx(1.0, abs=1e-9)

    def test_bad_input_label_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "entangle", "--theta", "0.5", "--input", "012")
        assert code == 2


class TestSweep:
    def test_endpoint_rows(self, tmp_path, capsys):
        out_path = tmp_path / "curve.csv"
        code, out, _ = run(capsys, "sweep", "--theta-min", "0",
                           "--theta-max", str(np.pi / 2), "--steps", "2",
                           "--out", str(out_path))
        assert code == 0
        validate(json.loads(out))
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == cli.SWEEP_HEADER
        assert len(lines) == 3  # header + steps rows
        first = [float(v) for v in lines[1].split(",")]
        last = [float(v) for v in lines[2].split(",")]
        assert first[1] == pytest.approx(0.0, abs=1e-9)       # tau at theta = 0
        assert first[3] == pytest.approx(2 / 3, abs=1e-9)     # pair concurrence
        assert all(abs(v) <= 1e-9 for v in last[1:7])          # separable point

    def test_ghz_row(self, tmp_path, capsys):
        out_path = tmp_path / "curve.csv"
        code, _, _ = run(capsys, "sweep", "--theta-min", "0",
                         "--theta-max", str(np.pi / 2), "--steps", "4",
                         "--out", str(out_path))
        assert code == 0
        rows = out_path.read_text().strip().split("\n")[1:]
        ghz_row = [float(v) for v in rows[1].split(",")]  # theta = pi/6
        assert ghz_row[0] == pytest.approx(np.pi / 6)
        assert ghz_row[1] == pytest.approx(1.0, abs=1e-9)

    def test_row_values_round_trip(self, tmp_path, capsys):
        out_path = tmp_path / "c.csv"
        run(capsys, "sweep", "--theta-min", "0.3", "--theta-max", "0.9",
            "--steps", "3", "--out", str(out_path))
        row = out_path.read_text().strip().split("\n")[1].split(",")
        assert float(row[0]) == 0.3

    def test_requires_out(self, capsys):
        code, _, err = run(capsys, "sweep", "--theta-min", "0",
                           "--theta-max", "1", "--steps", "2")
        assert code == 2 and "out" in err

    def test_bad_grid_rejected(self, capsys, tmp_path):
        code, _, _ = run(capsys, "sweep", "--theta-min", "1", "--theta-max", "0",
                         "--steps", "2", "--out", str(tmp_path / "x.csv"))
        assert code == 2
        code, _, _ = run(capsys, "sweep", "--theta-min", "0", "--theta-max", "1",
                         "--steps", "1", "--out", str(tmp_path / "x.csv"))
        assert code == 2


class TestSpectrum:
    def test_closed_form_eigenvalues(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--theta", "1.0471975511965976")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        eigs = payload["results"]["eigenvalues"]
        assert np.allclose(eigs, [-0.5, -0.5, 0, 0, 0, 0, 0.5, 0.5], atol=1e-10)
        assert payload["results"]["degeneracy_pattern"] == [2, 4, 2]

    def test_flat_point(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--theta", str(np.pi / 2))
        assert code == 0
        assert json.loads(out)["results"]["degeneracy_pattern"] == [8]


class TestBerry:
    def test_analytic_equator(self, capsys):
        code, out, _ = run(capsys, "berry", "--theta", "1.5707963267948966",
                           "--steps", "2000", "--method", "analytic")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        by_level = {r["level"]: r for r in payload["results"]["reports"]}
        assert by_level["minus"]["phases"][0] == pytest.approx(np.pi, abs=1e-5)
        assert by_level["plus"]["phases"][0] == pytest.approx(-np.pi, abs=1e-5)
        assert by_level["zero"]["phases"] == [0.0, 0.0, 0.0, 0.0]

    def test_wilson_single_level(self, capsys):
        code, out, _ = run(capsys, "berry", "--theta", "1.0471975511965976",
                           "--steps", "250", "--method", "wilson", "--level", "minus")
        assert code == 0
        payload = json.loads(out)
        validate(payload)
        (rep,) = payload["results"]["reports"]
        for p in rep["phases"]:
            assert abs(p - np.pi / 2) <= 1e-3

    def test_wilson_at_crossing_is_numerical_failure(self, capsys):
        code, _, err = run(capsys, "berry", "--theta", str(np.pi / 2),
                           "--steps", "150", "--method", "wilson", "--level", "minus")
        assert code == 3 and "numerical" in err


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_required_flag(self, capsys):
        assert run(capsys, "entangle")[0] == 2

    def test_csv_format_outside_sweep(self, capsys):
        code, _, err = run(capsys, "entangle", "--theta", "0.5", "--format", "csv")
        assert code == 2 and "csv" in err


class TestOutFile:
    def test_json_to_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = run(capsys, "spectrum", "--theta", "0.9",
                           "--out", str(target))
        assert code == 0 and out == ""
        validate(json.loads(target.read_text()))
