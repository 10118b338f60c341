"""Variational imaginary-time evolution.

Per step the metric A_ij = Re<d_i psi|d_j psi> and the force
C_i = -Re<d_i psi|H|psi> are assembled from pi-shifted statevectors
(d_i |psi> = |psi(theta + pi e_i)> / 2 for half-angle rotation generators),
then theta advances by dt * solution of the Tikhonov-regularized system
(A + reg*I) theta_dot = C.

Steps that raise the energy (or hit a singular solve) are rejected with dt
halved, at most three times, after which the run aborts with a diagnostic.
"""
from __future__ import annotations

import math

import numpy as np

from ..simcore.circuit import Circuit
from ..simcore.pauli import PauliSum
from ..simcore.state import StateVector, expectation, run_statevector, apply_pauli_word
from ..profiler.recorder import ResourceRecorder
from .trace import TrainingTrace

ENERGY_INCREASE_TOL = 1e-9


def varqite_circuit_count(steps: int, num_params: int, num_terms: int) -> int:
    """t * (q(q+1)/2 + q*p): symmetric A entries plus per-term C entries."""
    q = num_params
    return steps * (q * (q + 1) // 2 + q * num_terms)


def _apply_hamiltonian(state: StateVector, h: PauliSum) -> np.ndarray:
    out = np.zeros_like(state.amplitudes)
    for coeff, word in h.terms:
        out += coeff * apply_pauli_word(state, word).amplitudes
    return out


def run_varqite(
    h: PauliSum,
    ansatz: Circuit,
    dt: float,
    steps: int,
    seed: int = 0,
    initial_params=None,
    regularization: float = 1e-6,
    recorder: ResourceRecorder | None = None,
) -> TrainingTrace:
    if dt <= 0:
        raise ValueError("dt must be > 0")
    if h.num_qubits != ansatz.num_qubits:
        raise ValueError("ansatz and hamiltonian qubit counts differ")
    if recorder is not None:
        recorder.start()

    q = ansatz.num_params
    p = len(h.terms)
    if initial_params is not None:
        theta = np.asarray(initial_params, dtype=float).copy()
        if len(theta) != q:
            raise ValueError(f"expected {q} initial parameters")
    else:
        from ..simcore.sampling import make_rng

        theta = make_rng(seed).uniform(-0.1, 0.1, size=q)

    depth = ansatz.depth()

    def energy(t):
        return expectation(run_statevector(ansatz, t), h)

    trace = TrainingTrace()
    current = energy(theta)
    trace.series.append((float(current), float(np.linalg.norm(theta))))
    step_dt = dt
    aborted = False

    for _ in range(steps):
        psi = run_statevector(ansatz, theta)
        shifted = [
            run_statevector(ansatz, theta + math.pi * np.eye(q)[i])
            for i in range(q)
        ]
        a_mat = np.empty((q, q))
        for i in range(q):
            for j in range(i, q):
                ov = np.vdot(shifted[i].amplitudes, shifted[j].amplitudes).real
                a_mat[i, j] = a_mat[j, i] = 0.25 * ov
        hpsi = _apply_hamiltonian(psi, h)
        c_vec = np.array(
            [-0.5 * np.vdot(s.amplitudes, hpsi).real for s in shifted]
        )
        if recorder is not None:
            recorder.record(
                circuits=q * (q + 1) // 2 + q * p, depth=depth, size=ansatz.num_qubits
            )

        accepted = False
        for _attempt in range(4):
            try:
                theta_dot = np.linalg.solve(
                    a_mat + regularization * np.eye(q), c_vec
                )
            except np.linalg.LinAlgError:
                theta_dot = None
            if theta_dot is not None and np.all(np.isfinite(theta_dot)):
                candidate = theta + step_dt * theta_dot
                new_energy = energy(candidate)
                if new_energy <= current + ENERGY_INCREASE_TOL:
                    theta, current = candidate, new_energy
                    accepted = True
                    break
            step_dt /= 2.0
        if not accepted:
            trace.warnings.append(
                "step rejected after 3 dt halvings (singular metric or "
                "energy increase); aborting"
            )
            aborted = True
            break
        trace.series.append((float(current), float(np.linalg.norm(theta))))

    trace.final_params = tuple(float(x) for x in theta)
    trace.converged = not aborted
    trace.extras = {
        "circuit_evaluations": varqite_circuit_count(
            len(trace.series) - 1, q, p
        ),
        "final_dt": step_dt,
    }
    if recorder is not None:
        recorder.stop()
    return trace
