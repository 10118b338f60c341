import math

import numpy as np
import pytest

from qutil.algokit import (
    build_hea_ansatz,
    run_varqite,
    tfim_chain,
    varqite_circuit_count,
)
from qutil.profiler import ResourceRecorder, profile
from qutil.simcore import Circuit, Gate, GateKind, PauliSum


class TestCircuitCount:
    def test_formula(self):
        # t * (q(q+1)/2 + q*p)
        assert varqite_circuit_count(1, 1, 1) == 2
        assert varqite_circuit_count(3, 4, 2) == 3 * (10 + 8)
        assert varqite_circuit_count(0, 5, 7) == 0

    def test_recorder_matches_formula(self):
        h = tfim_chain(2)
        ansatz = build_hea_ansatz(2, 1)
        recorder = ResourceRecorder()
        trace = run_varqite(h, ansatz, dt=0.1, steps=4, seed=0, recorder=recorder)
        steps_taken = len(trace.series) - 1
        expected = varqite_circuit_count(steps_taken, ansatz.num_params, len(h.terms))
        assert profile(recorder).circuits_executed == expected
        assert trace.extras["circuit_evaluations"] == expected


class TestEvolution:
    def test_single_qubit_z_reaches_ground_state(self):
        h = PauliSum(1, ((1.0, "Z"),))
        ansatz = Circuit(
            1, (Gate(GateKind.RY, (0,), param_slot=0),), num_params=1
        )
        trace = run_varqite(h, ansatz, dt=0.2, steps=60, initial_params=[0.3])
        assert trace.final_objective == pytest.approx(-1.0, abs=1e-3)

    def test_energy_never_increases(self):
        trace = run_varqite(
            tfim_chain(2), build_hea_ansatz(2, 1), dt=0.1, steps=25, seed=3
        )
        energies = [e for e, _ in trace.series]
        for before, after in zip(energies, energies[1:]):
            assert after <= before + 1e-9

    def test_tfim_approaches_ground_energy(self):
        trace = run_varqite(
            tfim_chain(2), build_hea_ansatz(2, 2), dt=0.1, steps=120, seed=1
        )
        assert trace.final_objective == pytest.approx(-math.sqrt(5), abs=5e-2)

    def test_deterministic_per_seed(self):
        h = tfim_chain(2)
        ansatz = build_hea_ansatz(2, 1)
        a = run_varqite(h, ansatz, dt=0.1, steps=10, seed=4)
        b = run_varqite(h, ansatz, dt=0.1, steps=10, seed=4)
        assert a.series == b.series
        assert a.final_params == b.final_params


class TestValidation:
    def test_bad_dt(self):
        with pytest.raises(ValueError):
            run_varqite(tfim_chain(2), build_hea_ansatz(2, 1), dt=0.0, steps=1)

    def test_qubit_mismatch(self):
        with pytest.raises(ValueError):
            run_varqite(tfim_chain(3), build_hea_ansatz(2, 1), dt=0.1, steps=1)

    def test_wrong_initial_param_length(self):
        with pytest.raises(ValueError):
            run_varqite(
                tfim_chain(2),
                build_hea_ansatz(2, 1),
                dt=0.1,
                steps=1,
                initial_params=[0.1],
            )

    def test_stationary_start_keeps_energy_flat(self):
        # theta = 0 on an RY ansatz is a metric-singular point for H = Z;
        # the regularized solve keeps the run finite and non-increasing
        h = PauliSum(1, ((1.0, "Z"),))
        ansatz = Circuit(
            1, (Gate(GateKind.RY, (0,), param_slot=0),), num_params=1
        )
        trace = run_varqite(h, ansatz, dt=0.1, steps=5, initial_params=[0.0])
        assert all(np.isfinite(e) for e, _ in trace.series)
        energies = [e for e, _ in trace.series]
        for before, after in zip(energies, energies[1:]):
            assert after <= before + 1e-9
