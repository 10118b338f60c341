import json
import os

import pytest
from click.testing import CliRunner

from qutil.cli import main
from qutil.simcore import Circuit, Gate, GateKind, circuit_to_json


@pytest.fixture()
def runner():
    return CliRunner()


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


class TestSurveyCommand:
    def test_writes_all_formats(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(main, ["-o", out, "survey"])
        assert result.exit_code == 0, result.output
        doc = read_json(os.path.join(out, "survey.json"))
        assert len(doc["rows"]) == 11
        assert os.path.exists(os.path.join(out, "survey.md"))
        assert os.path.exists(os.path.join(out, "survey.csv"))
        assert os.path.exists(os.path.join(out, "manifest.json"))

    def test_json_format_prints_rows(self, runner, tmp_path):
        result = runner.invoke(
            main, ["-o", str(tmp_path), "survey", "--format", "json"]
        )
        assert result.exit_code == 0
        assert len(json.loads(result.output)["rows"]) == 11


class TestScoreCommand:
    def test_worked_example(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "score", "--performance", "1000", "--runtime", "10",
             "--power", "50", "--volume", "2"],
        )
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["score_per_joule"] == 2.0
        assert doc["score_per_joule_liter"] == 1.0
        assert read_json(os.path.join(out, "score.json"))["score_per_joule"] == 2.0

    def test_bad_input_exits_1(self, runner, tmp_path):
        result = runner.invoke(
            main,
            ["-o", str(tmp_path), "score", "--performance", "-1",
             "--runtime", "10", "--power", "50"],
        )
        assert result.exit_code == 1


class TestVerdictCommand:
    def outcome(self, runtime, power):
        return {
            "performance": 100.0,
            "runtime_seconds": runtime,
            "accuracy_error": 1e-3,
            "device": {
                "name": "dev",
                "power_watts": power,
                "volume_liters": 2.0,
                "weight_kg": 10.0,
                "cost_currency_units": 1000.0,
            },
        }

    def test_energy_win(self, runner, tmp_path):
        cand = tmp_path / "cand.json"
        base = tmp_path / "base.json"
        cand.write_text(json.dumps(self.outcome(5.0, 50.0)))
        base.write_text(json.dumps(self.outcome(4.0, 100.0)))
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "verdict", "--candidate", str(cand), "--baseline", str(base)],
        )
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "quantum_utility"
        doc = read_json(os.path.join(out, "verdict.json"))
        assert doc["criteria"]["less_energy"] is True


class TestCompileCommand:
    def test_compiles_bell(self, runner, tmp_path):
        circ_file = tmp_path / "bell.json"
        circuit = Circuit(2, (Gate(GateKind.H, (0,)), Gate(GateKind.CNOT, (0, 1))))
        circ_file.write_text(circuit_to_json(circuit))
        out = str(tmp_path / "out")
        result = runner.invoke(
            main, ["-o", out, "compile", str(circ_file), "--topology", "linear"]
        )
        assert result.exit_code == 0, result.output
        doc = read_json(os.path.join(out, "compiled.json"))
        assert doc["equivalent"] is True

    def test_malformed_file_exits_1(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        result = runner.invoke(main, ["-o", str(tmp_path), "compile", str(bad)])
        assert result.exit_code == 1


class TestBenchCommand:
    def test_vqe_run_writes_artifacts(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "bench", "run", "vqe", "-s", "num_qubits=2", "--seed", "0"],
        )
        assert result.exit_code == 0, result.output
        doc = read_json(os.path.join(out, "bench_vqe.json"))
        assert doc["results"]["abs_error"] < 1e-3
        assert "runtime" not in doc  # timing lives in its own file
        assert "wall_seconds" in read_json(os.path.join(out, "timing.json"))

    def test_unknown_app_exits_1(self, runner, tmp_path):
        result = runner.invoke(
            main, ["-o", str(tmp_path), "bench", "run", "qft"]
        )
        assert result.exit_code == 1

    def test_bad_override_exits_1(self, runner, tmp_path):
        result = runner.invoke(
            main, ["-o", str(tmp_path), "bench", "run", "vqe", "-s", "num_qubits"]
        )
        assert result.exit_code == 1


class TestSweepCommand:
    def test_reuploading_sweep(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "sweep", "reuploading", "--sizes", "1,2,3,4",
             "--seed", "0", "--no-plot"],
        )
        assert result.exit_code == 0, result.output
        doc = read_json(os.path.join(out, "sweep_reuploading.json"))
        assert doc["row_report"]["cells"]["depth"]["status"] == "MATCH"

    def test_plot_is_written(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "sweep", "reuploading", "--sizes", "1,2,3,4", "--seed", "0"],
        )
        assert result.exit_code == 0, result.output
        svg = os.path.join(out, "sweep_reuploading.svg")
        assert os.path.exists(svg)
        with open(svg) as fh:
            assert "<svg" in fh.read()

    def test_bad_sizes_exit_1(self, runner, tmp_path):
        result = runner.invoke(
            main, ["-o", str(tmp_path), "sweep", "reuploading", "--sizes", "a,b"]
        )
        assert result.exit_code == 1


class TestMirrorCommand:
    def test_noiseless(self, runner, tmp_path):
        out = str(tmp_path / "out")
        result = runner.invoke(
            main,
            ["-o", out, "mirror", "--sizes", "2,3", "--shots", "100", "--seed", "1"],
        )
        assert result.exit_code == 0, result.output
        doc = read_json(os.path.join(out, "mirror.json"))
        assert all(r["success_probability"] == 1.0 for r in doc["results"])


class TestReportCommand:
    def test_report_with_measured_sweep(self, runner, tmp_path):
        out = str(tmp_path / "out")
        sweep = runner.invoke(
            main,
            ["-o", out, "sweep", "reuploading", "--sizes", "1,2,3,4",
             "--seed", "0", "--no-plot"],
        )
        assert sweep.exit_code == 0
        result = runner.invoke(
            main,
            ["-o", out, "report", "--measured",
             os.path.join(out, "sweep_reuploading.json")],
        )
        assert result.exit_code == 0, result.output
        assert os.path.exists(os.path.join(out, "report.md"))
        doc = read_json(os.path.join(out, "report.json"))
        assert "reuploading" in doc["measured"]
