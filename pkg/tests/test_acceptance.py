"""End-to-end acceptance checks for the full harness.

Each test class corresponds to one externally stated acceptance criterion;
tolerances are part of the contract and must not be loosened.
"""
import json
import math
import os
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from qutil.algokit import (
    ShotConfig,
    VqeProblem,
    build_hea_ansatz,
    exact_ground_energy,
    quantum_kernel_matrix,
    run_varqite,
    run_vqe,
    shots_to_resolve_uniform,
    tfim_chain,
    varqite_circuit_count,
)
from qutil.algokit.datasets import LabeledDataset
from qutil.arlkit import ArlLevel, builtin_survey
from qutil.cli import main as cli_main
from qutil.profiler import (
    ResourceRecorder,
    ScalingClass,
    fit_scaling,
    mirror_benchmark,
    profile,
    verify_table_row,
)
from qutil.qcompile import (
    NativeGateSet,
    Topology,
    TopologyKind,
    compile_circuit,
    verify_equivalence,
)
from qutil.simcore import (
    Circuit,
    Gate,
    GateKind,
    NoiseModel,
    PauliSum,
    circuit_to_json,
    expectation,
    make_rng,
    run_statevector,
    sample_counts,
)
from qutil.swapc import RunOutcome, DeviceSpec, Verdict, score1, score2, utility_verdict

GOLDEN = Path(__file__).parent / "data" / "survey_golden.json"


class TestCriterion01SurveyReproduction:
    """Built-in survey matches the frozen golden table cell-for-cell."""

    def test_golden_file(self):
        golden = json.loads(GOLDEN.read_text())
        current = {"rows": [row.to_dict() for row in builtin_survey()]}
        assert current == golden

    def test_row_count_and_levels(self):
        rows = builtin_survey()
        assert len(rows) == 11
        levels = {r.app_id: r.level for r in rows}
        assert levels.pop("vqe") == ArlLevel.ARL3
        assert set(levels.values()) == {ArlLevel.ARL2}


class TestCriterion02ScoreFormulas:
    def test_worked_examples(self):
        assert score1(1000, 10, 50) == 2.0
        assert score2(1000, 2, 10, 50) == 1.0

    def test_homogeneity_over_random_tuples(self):
        rng = make_rng(2024)
        for _ in range(1000):
            p, v, r, w = rng.uniform(0.1, 1000.0, size=4)
            k = float(rng.uniform(0.2, 5.0))
            assert score1(k * p, r, w) == pytest.approx(k * score1(p, r, w))
            assert score1(p, k * r, w) == pytest.approx(score1(p, r, w) / k)
            assert score1(p, r, k * w) == pytest.approx(score1(p, r, w) / k)
            assert score2(p, k * v, k * r, k * w) == pytest.approx(
                score2(p, v, r, w) / k**3
            )


class TestCriterion03VqeCorrectness:
    def test_two_site_tfim_reaches_ground_energy(self):
        problem = VqeProblem(tfim_chain(2), build_hea_ansatz(2, 2))
        trace = run_vqe(problem, seed=0)
        assert abs(trace.final_objective - (-math.sqrt(5))) < 1e-3

    def test_variational_bound_never_violated(self):
        rng = make_rng(77)
        ground = {n: exact_ground_energy(tfim_chain(n)) for n in range(2, 7)}
        for _ in range(50):
            n = int(rng.integers(2, 7))
            layers = int(rng.integers(1, 4))
            ansatz = build_hea_ansatz(n, layers)
            params = rng.uniform(-math.pi, math.pi, ansatz.num_params)
            energy = expectation(run_statevector(ansatz, params), tfim_chain(n))
            assert energy >= ground[n] - 1e-9


class TestCriterion04Varqite:
    def test_single_qubit_flow_converges(self):
        h = PauliSum(1, ((1.0, "Z"),))
        ansatz = Circuit(
            1, (Gate(GateKind.RY, (0,), param_slot=0),), num_params=1
        )
        trace = run_varqite(h, ansatz, dt=0.2, steps=80, initial_params=[0.3])
        assert abs(trace.final_objective - (-1.0)) < 1e-3

    def test_energy_non_increasing_on_tfim(self):
        trace = run_varqite(
            tfim_chain(2), build_hea_ansatz(2, 2), dt=0.1, steps=40, seed=0
        )
        energies = [e for e, _ in trace.series]
        for before, after in zip(energies, energies[1:]):
            assert after <= before + 1e-9

    def test_circuit_count_accounting_is_exact(self):
        h = tfim_chain(2)
        ansatz = build_hea_ansatz(2, 1)
        recorder = ResourceRecorder()
        trace = run_varqite(h, ansatz, dt=0.05, steps=6, seed=1, recorder=recorder)
        steps_taken = len(trace.series) - 1
        expected = varqite_circuit_count(
            steps_taken, ansatz.num_params, len(h.terms)
        )
        assert profile(recorder).circuits_executed == expected
        assert trace.extras["circuit_evaluations"] == expected


_COMPILE_KINDS = [GateKind.H, GateKind.X, GateKind.Y, GateKind.Z, GateKind.RX,
                  GateKind.RY, GateKind.RZ, GateKind.CNOT, GateKind.CZ,
                  GateKind.SWAP, GateKind.CCNOT]


def _random_circuit(rng) -> Circuit:
    n = int(rng.integers(2, 7))
    depth = int(rng.integers(1, 21))
    gates = []
    for _ in range(depth):
        kind = _COMPILE_KINDS[int(rng.integers(len(_COMPILE_KINDS)))]
        arity = {GateKind.CNOT: 2, GateKind.CZ: 2, GateKind.SWAP: 2,
                 GateKind.CCNOT: 3}.get(kind, 1)
        if arity > n:
            continue
        targets = tuple(int(q) for q in rng.choice(n, size=arity, replace=False))
        if kind in (GateKind.RX, GateKind.RY, GateKind.RZ):
            gates.append(
                Gate(kind, targets, angle=float(rng.uniform(-math.pi, math.pi)))
            )
        else:
            gates.append(Gate(kind, targets))
    return Circuit(n, tuple(gates))


class TestCriterion05CompilerSoundness:
    def test_200_random_circuits_on_every_topology(self):
        rng = make_rng(500)
        natives = NativeGateSet()
        circuits = [_random_circuit(rng) for _ in range(200)]
        for topology in TopologyKind:
            for circ in circuits:
                topo = Topology(topology, circ.num_qubits)
                compiled = compile_circuit(circ, natives, topo)
                assert verify_equivalence(
                    circ, compiled.circuit, compiled.qubit_map
                )
                for g in compiled.circuit.gates:
                    assert natives.is_native(g)
                    if len(g.targets) == 2:
                        assert topo.adjacent(*g.targets)


class TestCriterion06ScalingFitRecovery:
    def test_synthetic_recovery_100_of_100(self):
        rng = make_rng(6)
        classes = [
            ScalingClass.constant,
            ScalingClass.linear,
            ScalingClass.poly_2,
            ScalingClass.exponential,
        ]
        for trial in range(100):
            expected = classes[trial % 4]
            prefactor = float(rng.uniform(0.1, 50.0))
            sizes = np.arange(2, 2 + int(rng.integers(4, 9)), dtype=float)
            if expected == ScalingClass.constant:
                counts = prefactor * np.ones_like(sizes)
            elif expected == ScalingClass.linear:
                counts = prefactor * sizes
            elif expected == ScalingClass.poly_2:
                counts = prefactor * sizes**2
            else:
                counts = prefactor * 2.0**sizes
            fit = fit_scaling(list(zip(sizes, counts)))
            assert fit.best_class == expected, (trial, expected)

    def test_compiled_ansatz_depth_grows_linearly(self):
        samples = []
        for n in (4, 6, 8, 10, 12):
            ansatz = build_hea_ansatz(n, 1)
            compiled = compile_circuit(
                ansatz, NativeGateSet(), Topology(TopologyKind.linear, n)
            )
            samples.append((n, compiled.circuit.depth()))
        fit = fit_scaling(samples, variable="N")
        assert fit.best_class == ScalingClass.linear
        report = verify_table_row("vqe", {"depth": fit})
        assert report.cells["depth"]["status"] == "MATCH"


class TestCriterion07KernelProperties:
    def test_20_random_datasets(self):
        rng = make_rng(7)
        for _ in range(20):
            points = tuple(
                (tuple(rng.uniform(-math.pi, math.pi, size=2)), 1)
                for _ in range(6)
            )
            data = LabeledDataset(points)
            recorder = ResourceRecorder()
            kernel = quantum_kernel_matrix(data, recorder=recorder)

            assert np.max(np.abs(kernel - kernel.T)) <= 1e-12
            assert np.max(np.abs(np.diag(kernel) - 1.0)) == 0.0
            assert np.linalg.eigvalsh(kernel).min() >= -1e-9

            from qutil.algokit import angle_encoder

            encoder = angle_encoder(2)
            states = [
                run_statevector(encoder, x).amplitudes for x in data.features
            ]
            for i in range(6):
                for j in range(6):
                    direct = abs(np.vdot(states[i], states[j])) ** 2
                    assert abs(kernel[i, j] - direct) <= 1e-10

            assert profile(recorder).circuits_executed == 6 * 5 // 2


class TestCriterion08MirrorBenchmark:
    def test_noiseless_success_certain_for_all_sizes(self):
        shots = 500
        for n in range(2, 9):
            ansatz = build_hea_ansatz(n, 2)
            params = make_rng(n).uniform(-math.pi, math.pi, ansatz.num_params)
            result = mirror_benchmark(
                {n: ansatz.bind(params)}, NoiseModel(0.0, 0.0), shots, seed=n
            )[0]
            # 5-sigma binomial band around p=1 collapses to the point 1.0
            sigma = math.sqrt(1.0 * 0.0 / shots)
            assert abs(result.success_probability - 1.0) <= 5 * sigma

    def test_noisy_success_decays_with_depth(self):
        noise = NoiseModel(0.005, 0.005)
        successes = []
        depths = []
        for layers in (1, 2, 4, 8):
            ansatz = build_hea_ansatz(4, layers)
            params = make_rng(40 + layers).uniform(
                -math.pi, math.pi, ansatz.num_params
            )
            result = mirror_benchmark(
                {4: ansatz.bind(params)}, noise, 4000, seed=8
            )[0]
            depths.append(result.depth)
            successes.append(result.success_probability)
        assert depths == sorted(depths)
        for shallow, deep in zip(successes, successes[1:]):
            assert deep < shallow


class TestCriterion09UtilityVerdicts:
    @staticmethod
    def _outcome(runtime, power, err, name="dev", volume=2.0):
        device = DeviceSpec(
            name=name,
            power_watts=power,
            volume_liters=volume,
            weight_kg=10.0,
            cost_currency_units=1000.0,
        )
        return RunOutcome(100.0, runtime, err, device)

    def test_worked_examples(self):
        # energy win: 5 s x 50 W = 250 J beats 4 s x 100 W = 400 J
        q = self._outcome(5.0, 50.0, 1e-3, "q")
        c = self._outcome(4.0, 100.0, 1e-3, "c")
        assert utility_verdict(q, c).verdict == Verdict.quantum_utility

        same = self._outcome(5.0, 50.0, 1e-3)
        assert utility_verdict(same, same).verdict == Verdict.no_utility

        far = self._outcome(1.0, 50.0, 0.0, "far", volume=100.0)
        assert utility_verdict(far, c).verdict == Verdict.not_comparable

    def test_antisymmetry_over_random_pairs(self):
        rng = make_rng(9)
        for _ in range(1000):
            rt_q, rt_c = rng.uniform(0.1, 100.0, size=2)
            pw_q, pw_c = rng.uniform(0.1, 100.0, size=2)
            err_q, err_c = rng.uniform(0.0, 1.0, size=2)
            q = self._outcome(rt_q, pw_q, err_q, "q")
            c = self._outcome(rt_c, pw_c, err_c, "c")
            fwd = utility_verdict(q, c).criteria
            rev = utility_verdict(c, q).criteria
            for key, (lhs, rhs) in {
                "faster": (rt_q, rt_c),
                "less_energy": (q.energy_joules, c.energy_joules),
                "more_accurate": (err_q, err_c),
            }.items():
                if lhs == rhs:
                    assert not fwd[key] and not rev[key]
                else:
                    assert fwd[key] != rev[key]


class TestCriterion10ShotPrecisionLaw:
    def test_std_scales_as_inverse_sqrt_shots(self):
        state = run_statevector(Circuit(1, (Gate(GateKind.H, (0,)),)))
        for shots in (100, 1000, 10_000):
            estimates = []
            for seed in range(200):
                counts = sample_counts(state, shots, seed)
                estimates.append(
                    (counts.get("0", 0) - counts.get("1", 0)) / shots
                )
            std = float(np.std(estimates))
            # <Z> = 0 here, so the estimator std is exactly 1/sqrt(S)
            assert abs(std * math.sqrt(shots) - 1.0) <= 0.2


class TestCriterion11QcbmShotGrowth:
    def test_shots_to_resolve_uniform_is_exponential(self):
        samples = [(n, shots_to_resolve_uniform(n)) for n in range(2, 6)]
        fit = fit_scaling(samples, variable="N")
        assert fit.best_class == ScalingClass.exponential


class TestCriterion12Determinism:
    COMMANDS = [
        ["survey"],
        ["score", "--performance", "1000", "--runtime", "10", "--power", "50",
         "--volume", "2"],
        ["bench", "run", "vqe", "-s", "num_qubits=2", "--seed", "0"],
        ["sweep", "reuploading", "--sizes", "1,2,3,4", "--seed", "0",
         "--no-plot"],
        ["mirror", "--sizes", "2,3", "--shots", "200", "--seed", "1"],
    ]

    @staticmethod
    def _json_artifacts(directory):
        out = {}
        for name in sorted(os.listdir(directory)):
            if name.endswith(".json") and name != "timing.json":
                with open(os.path.join(directory, name), "rb") as fh:
                    out[name] = fh.read()
        return out

    @pytest.mark.parametrize("command", COMMANDS, ids=lambda c: c[0])
    def test_reruns_are_byte_identical(self, command, tmp_path):
        runner = CliRunner()
        artifacts = []
        for run_dir in ("a", "b"):
            out = str(tmp_path / run_dir)
            result = runner.invoke(cli_main, ["-o", out] + command)
            assert result.exit_code == 0, result.output
            artifacts.append(self._json_artifacts(out))
        assert artifacts[0].keys() == artifacts[1].keys()
        assert artifacts[0] == artifacts[1]

    def test_compile_artifacts_deterministic(self, tmp_path):
        circuit = Circuit(
            2, (Gate(GateKind.H, (0,)), Gate(GateKind.CNOT, (0, 1)))
        )
        circ_file = tmp_path / "bell.json"
        circ_file.write_text(circuit_to_json(circuit))
        runner = CliRunner()
        artifacts = []
        for run_dir in ("a", "b"):
            out = str(tmp_path / run_dir)
            result = runner.invoke(
                cli_main,
                ["-o", out, "compile", str(circ_file), "--topology", "linear"],
            )
            assert result.exit_code == 0, result.output
            artifacts.append(self._json_artifacts(out))
        assert artifacts[0] == artifacts[1]
