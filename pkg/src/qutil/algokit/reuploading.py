"""Single-qubit data re-uploading classifier.

Features are padded to length-3 blocks; each layer re-encodes every block as
a RY-RZ-RY rotation triple and follows it with a trainable RY-RZ-RY triple
(3 weights per layer). The cost is one minus the fidelity to the class
anchor state: |0> for label +1, |1> for label -1. Each weight feeds a single
rotation, so the cost is sinusoidal per coordinate and coordinate descent
applies directly.
"""
from __future__ import annotations

import math

import numpy as np

from ..simcore.circuit import Circuit, Gate, GateKind
from ..simcore.sampling import make_rng
from ..simcore.state import run_statevector
from ..profiler.recorder import ResourceRecorder
from .datasets import LabeledDataset
from .optimizers import coordinate_descent
from .trace import TrainingTrace


def _pad_blocks(features) -> list[tuple[float, float, float]]:
    feats = list(features)
    while len(feats) % 3:
        feats.append(0.0)
    return [tuple(feats[i : i + 3]) for i in range(0, len(feats), 3)]


def build_reuploading_circuit(feature_dim: int, layers: int) -> Circuit:
    """Parameter slots hold only the trainable weights (3 per layer);
    encoding angles are baked per data point via bind_features."""
    if layers < 1:
        raise ValueError("layers must be >= 1")
    # placeholder encoding angles of 0; use bind_features for real points
    return bind_features(
        [0.0] * feature_dim, layers, num_weight_slots=3 * layers
    )


def bind_features(features, layers: int, num_weight_slots: int | None = None) -> Circuit:
    blocks = _pad_blocks(features)
    slots = num_weight_slots if num_weight_slots is not None else 3 * layers
    gates = []
    slot = 0
    kinds = (GateKind.RY, GateKind.RZ, GateKind.RY)
    for _ in range(layers):
        for block in blocks:
            for kind, angle in zip(kinds, block):
                gates.append(Gate(kind, (0,), angle=float(angle)))
        for kind in kinds:
            gates.append(Gate(kind, (0,), param_slot=slot))
            slot += 1
    return Circuit(1, tuple(gates), num_params=slots)


def run_reuploading(
    data: LabeledDataset,
    layers: int = 1,
    sweeps: int = 30,
    seed: int = 0,
    recorder: ResourceRecorder | None = None,
) -> TrainingTrace:
    if layers < 1:
        raise ValueError("layers must be >= 1")
    labels = data.labels
    if set(labels.tolist()) - {-1, 1}:
        raise ValueError("re-uploading classifier needs +/-1 labels")
    if recorder is not None:
        recorder.start()

    circuits = [bind_features(x, layers) for x in data.features]
    depth = circuits[0].depth()

    def anchor_fidelity(circ: Circuit, weights, label: int) -> float:
        amps = run_statevector(circ, weights).amplitudes
        return float(np.abs(amps[0 if label == 1 else 1]) ** 2)

    def cost(weights) -> float:
        total = 0.0
        for circ, y in zip(circuits, labels):
            total += 1.0 - anchor_fidelity(circ, weights, y)
        if recorder is not None:
            recorder.record(circuits=len(circuits), depth=depth, size=len(circuits))
        return total / len(circuits)

    rng = make_rng(seed)
    w0 = rng.uniform(-0.2, 0.2, size=3 * layers)
    weights, history, converged = coordinate_descent(cost, w0, sweeps=sweeps)

    correct = sum(
        1
        for circ, y in zip(circuits, labels)
        if anchor_fidelity(circ, weights, y) >= 0.5
    )
    trace = TrainingTrace(
        series=[(float(v), float(np.linalg.norm(weights))) for v in history],
        final_params=tuple(float(w) for w in weights),
        converged=converged,
        extras={"accuracy": correct / len(data), "circuit_depth": depth},
    )
    if recorder is not None:
        recorder.stop()
    return trace
