"""Hardware-efficient ansatz: per-qubit RY,RZ layers with a CZ neighbor chain.

The CZ chain runs sequentially along the line, so the ansatz is native to a
linear topology (zero routing SWAPs) and its depth grows linearly with the
qubit count.
"""
from __future__ import annotations

from ..simcore.circuit import Circuit, Gate, GateKind


def build_hea_ansatz(num_qubits: int, layers: int) -> Circuit:
    if num_qubits < 1 or layers < 1:
        raise ValueError("num_qubits and layers must be >= 1")
    gates = []
    slot = 0
    for _ in range(layers):
        for q in range(num_qubits):
            gates.append(Gate(GateKind.RY, (q,), param_slot=slot))
            slot += 1
        for q in range(num_qubits):
            gates.append(Gate(GateKind.RZ, (q,), param_slot=slot))
            slot += 1
        for q in range(num_qubits - 1):
            gates.append(Gate(GateKind.CZ, (q, q + 1)))
    return Circuit(num_qubits, tuple(gates), num_params=slot)
