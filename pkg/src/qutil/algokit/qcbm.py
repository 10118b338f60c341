"""Quantum circuit Born machine trained on total variation distance.

The model is the hardware-efficient ansatz; per iteration a single circuit
is sampled (S shots) and the loss is the TVD between the empirical and
target distributions. SPSA is the default optimizer since the sampled loss
is gradient-hostile. Shot batches are seed-split per evaluation so runs stay
deterministic while remaining shot-parallelizable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..simcore.circuit import Circuit
from ..simcore.sampling import bitstring, make_rng, sample_counts
from ..simcore.state import run_statevector
from ..profiler.recorder import ResourceRecorder
from .ansatz import build_hea_ansatz
from .optimizers import spsa_minimize
from .trace import TrainingTrace

MAX_QCBM_QUBITS = 8


@dataclass(frozen=True)
class TargetDistribution:
    num_qubits: int
    probabilities: tuple

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float)
        if len(probs) != 2**self.num_qubits:
            raise ValueError("need 2^N probabilities")
        if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
            raise ValueError("probabilities must be non-negative and sum to 1")
        object.__setattr__(self, "probabilities", tuple(float(p) for p in probs))

    @classmethod
    def point_mass(cls, num_qubits: int, bits: str) -> "TargetDistribution":
        probs = np.zeros(2**num_qubits)
        probs[int(bits, 2)] = 1.0
        return cls(num_qubits, tuple(probs))

    @classmethod
    def uniform(cls, num_qubits: int) -> "TargetDistribution":
        dim = 2**num_qubits
        return cls(num_qubits, tuple([1.0 / dim] * dim))


def tvd(p, q) -> float:
    """Total variation distance: half the L1 distance."""
    return 0.5 * float(np.abs(np.asarray(p, float) - np.asarray(q, float)).sum())


def _empirical(counts: dict[str, int], num_qubits: int) -> np.ndarray:
    probs = np.zeros(2**num_qubits)
    total = sum(counts.values())
    for bits, c in counts.items():
        probs[int(bits, 2)] = c / total
    return probs


def run_qcbm(
    target: TargetDistribution,
    layers: int = 2,
    iterations: int = 80,
    shots: int | None = 2048,
    seed: int = 0,
    recorder: ResourceRecorder | None = None,
) -> TrainingTrace:
    """Train a Born machine; shots=None uses exact output probabilities."""
    n = target.num_qubits
    if n > MAX_QCBM_QUBITS:
        raise ValueError(f"desk-scale limit is {MAX_QCBM_QUBITS} qubits")
    if recorder is not None:
        recorder.start()

    ansatz = build_hea_ansatz(n, layers)
    depth = ansatz.depth()
    goal = np.asarray(target.probabilities)
    warnings = []
    if shots is not None and shots < 10 * 2**n:
        warnings.append(
            f"shots={shots} may be too few to resolve a {2**n}-outcome target"
        )
    eval_counter = [0]

    def loss(params) -> float:
        eval_counter[0] += 1
        state = run_statevector(ansatz, params)
        if shots is None:
            model = state.probabilities()
        else:
            counts = sample_counts(state, shots, seed + eval_counter[0])
            model = _empirical(counts, n)
        if recorder is not None:
            recorder.record(circuits=1, shots=shots or 0, depth=depth, size=n)
        return tvd(model, goal)

    rng = make_rng(seed)
    theta0 = rng.uniform(-math.pi, math.pi, size=ansatz.num_params)
    params, history, _ = spsa_minimize(
        loss, theta0, iterations=iterations, seed=seed + 23, a=0.6, c=0.3
    )
    trace = TrainingTrace(
        series=[(float(v), float(np.linalg.norm(params))) for v in history],
        final_params=tuple(float(x) for x in params),
        converged=True,
        warnings=warnings,
        extras={"final_tvd": float(history[-1]), "loss_evaluations": eval_counter[0]},
    )
    # report the loss at the returned best parameters
    final = loss(np.asarray(params))
    trace.series[-1] = (float(final), float(np.linalg.norm(params)))
    trace.extras["final_tvd"] = float(final)
    if recorder is not None:
        recorder.stop()
    return trace


def shots_to_resolve_uniform(
    num_qubits: int,
    tolerance: float = 0.06,
    seed: int = 0,
    repeats: int = 20,
    max_shots: int = 1 << 22,
) -> int:
    """Smallest shot count (powers of two) whose sampled TVD against the
    uniform target stays within tolerance, for the exactly-uniform state."""
    from ..simcore.circuit import Gate, GateKind

    n = num_qubits
    circ = Circuit(n, tuple(Gate(GateKind.H, (q,)) for q in range(n)))
    state = run_statevector(circ)
    goal = np.full(2**n, 1.0 / 2**n)
    shots = 2
    while shots <= max_shots:
        dists = [
            tvd(_empirical(sample_counts(state, shots, seed + r), n), goal)
            for r in range(repeats)
        ]
        if float(np.mean(dists)) <= tolerance:
            return shots
        shots *= 2
    raise RuntimeError("tolerance not reachable within max_shots")
