"""Quantum variational classifier.

Angle-encoded features followed by trainable HEA-style layers; the label is
the sign of <Z> on qubit 0 and training minimizes a hinge loss on the margin
y * <Z>. One readout circuit per training point per epoch. In noisy mode the
margin comes from trajectory sampling and training switches to SPSA, which
keeps the circuit count per iteration independent of the parameter count.
"""
from __future__ import annotations

import math

import numpy as np

from ..simcore.circuit import Circuit, Gate, GateKind
from ..simcore.noise import NoiseModel, run_noisy
from ..simcore.pauli import PauliSum
from ..simcore.sampling import index_of_bitstring, make_rng
from ..simcore.state import expectation, run_statevector
from ..profiler.recorder import ResourceRecorder
from .datasets import LabeledDataset
from .optimizers import parameter_shift_gradient
from .trace import TrainingTrace


def _qvc_circuit(feature_dim: int, layers: int) -> Circuit:
    """Slots [0, d) are features, the rest are trainable weights."""
    n = feature_dim
    gates = [Gate(GateKind.RY, (q,), param_slot=q) for q in range(n)]
    slot = n
    for _ in range(layers):
        for q in range(n):
            gates.append(Gate(GateKind.RY, (q,), param_slot=slot))
            slot += 1
        for q in range(n):
            gates.append(Gate(GateKind.RZ, (q,), param_slot=slot))
            slot += 1
        for q in range(n - 1):
            gates.append(Gate(GateKind.CZ, (q, q + 1)))
    return Circuit(n, tuple(gates), num_params=slot)


def _readout(n: int) -> PauliSum:
    return PauliSum(n, ((1.0, "I" * (n - 1) + "Z"),))


def _z0_from_counts(counts: dict[str, int]) -> float:
    total = sum(counts.values())
    acc = 0
    for bits, c in counts.items():
        acc += c * (1 - 2 * (index_of_bitstring(bits) & 1))
    return acc / total


def run_qvc(
    data: LabeledDataset,
    layers: int = 1,
    epochs: int = 30,
    learning_rate: float = 0.3,
    noise: NoiseModel | None = None,
    shots: int = 256,
    seed: int = 0,
    recorder: ResourceRecorder | None = None,
) -> TrainingTrace:
    labels = data.labels
    if set(labels.tolist()) - {-1, 1}:
        raise ValueError("QVC needs binary +/-1 labels")
    if recorder is not None:
        recorder.start()

    circuit = _qvc_circuit(data.feature_dim, layers)
    observable = _readout(circuit.num_qubits)
    xs = data.features
    n_weights = circuit.num_params - data.feature_dim
    rng = make_rng(seed)
    weights = rng.uniform(-0.3, 0.3, size=n_weights)
    depth = circuit.depth()
    noisy = noise is not None and not noise.is_trivial
    eval_counter = [0]

    def margin(x, w) -> float:
        params = np.concatenate([x, w])
        eval_counter[0] += 1
        if noisy:
            counts = run_noisy(circuit, params, noise, shots, seed + eval_counter[0])
            return _z0_from_counts(counts)
        return expectation(run_statevector(circuit, params), observable)

    def hinge_loss(w) -> float:
        total = 0.0
        for x, y in zip(xs, labels):
            total += max(0.0, 1.0 - y * margin(x, w))
        if recorder is not None:
            recorder.record(
                circuits=len(xs),
                shots=len(xs) * (shots if noisy else 0),
                depth=depth,
                size=len(xs),
            )
        return total / len(xs)

    trace = TrainingTrace()
    trace.series.append((hinge_loss(weights), float(np.linalg.norm(weights))))

    if noisy:
        from .optimizers import spsa_minimize

        weights, history, _ = spsa_minimize(
            hinge_loss, weights, iterations=epochs, seed=seed + 13
        )
        trace.series = [
            (float(v), float("nan")) for v in history
        ]
        trace.series[-1] = (float(history[-1]), float(np.linalg.norm(weights)))
    else:
        for _ in range(epochs):
            grad = np.zeros(n_weights)
            for x, y in zip(xs, labels):
                params = np.concatenate([x, weights])
                if 1.0 - y * margin(x, weights) > 0.0:
                    full = parameter_shift_gradient(circuit, params, observable)
                    grad += -y * full[data.feature_dim :]
            weights = weights - learning_rate * grad / len(xs)
            trace.series.append(
                (hinge_loss(weights), float(np.linalg.norm(weights)))
            )

    correct = sum(
        1 for x, y in zip(xs, labels) if (1 if margin(x, weights) >= 0 else -1) == y
    )
    trace.final_params = tuple(float(w) for w in weights)
    trace.converged = True
    trace.extras = {
        "accuracy": correct / len(xs),
        "margin_evaluations": eval_counter[0],
    }
    if recorder is not None:
        recorder.stop()
    return trace
