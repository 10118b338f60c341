"""Quantum kernel matrices and the ridge-regularized kernel classifier.

K_ij = |<0| U(x_i)^dag U(x_j) |0>|^2, read off as the all-zeros probability
of the composed circuit U(x_j) followed by the inverse of U(x_i). Exactly
|T|(|T|-1)/2 distinct circuits are executed; the diagonal is 1 by identity.

The classifier is a least-squares kernel machine, (K + ridge*I) alpha = y,
standing in for a full SVM.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..simcore.circuit import Circuit, Gate, GateKind
from ..simcore.sampling import sample_counts
from ..simcore.state import run_statevector
from ..profiler.recorder import ResourceRecorder
from .datasets import LabeledDataset


def angle_encoder(feature_dim: int) -> Circuit:
    """One RY rotation per feature, qubit i <- feature i."""
    gates = tuple(
        Gate(GateKind.RY, (i,), param_slot=i) for i in range(feature_dim)
    )
    return Circuit(feature_dim, gates, num_params=feature_dim)


def layered_encoder(feature_dim: int, layers: int = 2) -> Circuit:
    """Angle encoding repeated through CZ-entangled layers (depth ~ layers*N)."""
    gates = []
    for _ in range(layers):
        for i in range(feature_dim):
            gates.append(Gate(GateKind.RY, (i,), param_slot=i))
        for i in range(feature_dim - 1):
            gates.append(Gate(GateKind.CZ, (i, i + 1)))
    return Circuit(feature_dim, tuple(gates), num_params=feature_dim)


def _overlap_circuit(encoder: Circuit, x_bra, x_ket) -> Circuit:
    ket = encoder.bind(x_ket)
    bra_inv = encoder.bind(x_bra).inverse()
    return Circuit(encoder.num_qubits, ket.gates + bra_inv.gates, 0)


def quantum_kernel_matrix(
    data: LabeledDataset,
    encoder: Circuit | None = None,
    mode: str = "exact",
    shots: int = 4096,
    seed: int = 0,
    recorder: ResourceRecorder | None = None,
) -> np.ndarray:
    if mode not in ("exact", "shots"):
        raise ValueError("mode must be 'exact' or 'shots'")
    encoder = encoder if encoder is not None else angle_encoder(data.feature_dim)
    if encoder.num_params != data.feature_dim:
        raise ValueError(
            f"encoder takes {encoder.num_params} features, data has "
            f"{data.feature_dim}"
        )
    if recorder is not None:
        recorder.start()
    xs = data.features
    m = len(data)
    kernel = np.eye(m)
    zeros = "0" * encoder.num_qubits
    depth = None
    executed = 0
    for i in range(m):
        for j in range(i + 1, m):
            circ = _overlap_circuit(encoder, xs[i], xs[j])
            if depth is None:
                depth = circ.depth()
            state = run_statevector(circ)
            if mode == "exact":
                p0 = float(np.abs(state.amplitudes[0]) ** 2)
            else:
                counts = sample_counts(state, shots, seed + executed)
                p0 = counts.get(zeros, 0) / shots
            kernel[i, j] = kernel[j, i] = p0
            executed += 1
    if recorder is not None:
        recorder.record(
            circuits=executed,
            shots=executed * (shots if mode == "shots" else 0),
            depth=depth or 0,
            size=m,
        )
        recorder.stop()
    return kernel


@dataclass(frozen=True)
class KernelClassifier:
    alpha: np.ndarray
    training_accuracy: float

    def decision(self, kernel_column: np.ndarray) -> float:
        return float(self.alpha @ kernel_column)

    def predict(self, kernel_column: np.ndarray) -> int:
        return 1 if self.decision(kernel_column) >= 0 else -1


def train_kernel_classifier(kernel: np.ndarray, labels, ridge: float) -> KernelClassifier:
    kernel = np.asarray(kernel, dtype=float)
    y = np.asarray(labels, dtype=float)
    if kernel.shape[0] != kernel.shape[1] or kernel.shape[0] != len(y):
        raise ValueError("kernel must be square and match the label count")
    if set(np.unique(y)) - {-1.0, 1.0}:
        raise ValueError("labels must be +/-1")
    if ridge <= 0:
        raise ValueError("ridge must be > 0 (the unregularized system can be singular)")
    alpha = np.linalg.solve(kernel + ridge * np.eye(len(y)), y)
    preds = np.sign(kernel @ alpha)
    preds[preds == 0] = 1
    accuracy = float(np.mean(preds == y))
    return KernelClassifier(alpha=alpha, training_accuracy=accuracy)
