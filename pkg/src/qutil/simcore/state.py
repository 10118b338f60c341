"""Statevector storage and unitary application.

Qubit 0 is the least-significant bit of the amplitude index. When an
amplitude array is reshaped to (2,)*N, qubit q lives on axis N-1-q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind, ROTATION_KINDS
from .pauli import PauliSum

_SQ2 = 1.0 / math.sqrt(2.0)

_FIXED_MATRICES = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    # 2-qubit matrices in the basis |t0 t1> with targets[0] the high bit
    GateKind.CZ: np.diag([1, 1, 1, -1]).astype(complex),
    GateKind.CNOT: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}
_CCNOT = np.eye(8, dtype=complex)
_CCNOT[[6, 7]] = _CCNOT[[7, 6]]
_FIXED_MATRICES[GateKind.CCNOT] = _CCNOT


def rotation_matrix(kind: GateKind, theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    if kind == GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind == GateKind.RY:
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == GateKind.RZ:
        return np.array(
            [[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex
        )
    raise ValueError(f"{kind} is not a rotation kind")


def gate_matrix(gate: Gate, bound_angle: float | None = None) -> np.ndarray:
    if gate.kind in ROTATION_KINDS:
        if gate.angle is not None:
            if bound_angle is not None:
                raise ValueError("angle supplied for a gate that already has one")
            return rotation_matrix(gate.kind, gate.angle)
        if bound_angle is None:
            raise ValueError("parameterized gate needs a bound angle")
        return rotation_matrix(gate.kind, bound_angle)
    if bound_angle is not None:
        raise ValueError(f"{gate.kind.value} takes no angle")
    return _FIXED_MATRICES[gate.kind]


@dataclass
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero(cls, num_qubits: int) -> "StateVector":
        if num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")
        amps = np.zeros(2**num_qubits, dtype=complex)
        amps[0] = 1.0
        return cls(num_qubits, amps)

    @classmethod
    def from_amplitudes(cls, amps) -> "StateVector":
        amps = np.asarray(amps, dtype=complex)
        n = int(round(math.log2(len(amps))))
        if 2**n != len(amps):
            raise ValueError("amplitude vector length must be a power of 2")
        return cls(n, amps.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy())


def _apply_matrix(amps: np.ndarray, n: int, unitary: np.ndarray, targets) -> np.ndarray:
    k = len(targets)
    axes = [n - 1 - q for q in targets]
    psi = amps.reshape((2,) * n)
    psi = np.moveaxis(psi, axes, range(k))
    shape = psi.shape
    psi = unitary @ psi.reshape(2**k, -1)
    psi = np.moveaxis(psi.reshape(shape), range(k), axes)
    return np.ascontiguousarray(psi).reshape(-1)


def apply_gate(state: StateVector, gate: Gate, bound_angle: float | None = None) -> StateVector:
    """Return the state after the gate's unitary; input is not modified."""
    if any(t >= state.num_qubits for t in gate.targets):
        raise IndexError(
            f"gate targets {gate.targets} out of range for {state.num_qubits} qubits"
        )
    unitary = gate_matrix(gate, bound_angle)
    amps = _apply_matrix(state.amplitudes, state.num_qubits, unitary, gate.targets)
    return StateVector(state.num_qubits, amps)


def run_statevector(circuit: Circuit, params=()) -> StateVector:
    """Apply all gates in order starting from |0...0>."""
    bound = circuit.bind(params) if circuit.num_params else circuit
    if circuit.num_params == 0 and len(params) != 0:
        raise ValueError("circuit takes no parameters")
    state = StateVector.zero(bound.num_qubits)
    for g in bound.gates:
        state = apply_gate(state, g)
    return state


def apply_pauli_word(state: StateVector, word: str) -> StateVector:
    """Apply a Pauli word (rendered qubit N-1 first, matching bitstrings)."""
    n = state.num_qubits
    if len(word) != n:
        raise ValueError(f"word length {len(word)} != num_qubits {n}")
    out = state
    for i, letter in enumerate(word):
        if letter == "I":
            continue
        qubit = n - 1 - i
        out = apply_gate(out, Gate(GateKind(letter), (qubit,)))
    return out


def expectation(state: StateVector, observable: PauliSum) -> float:
    """Exact <psi|H|psi> for a weighted Pauli sum."""
    if observable.num_qubits != state.num_qubits:
        raise ValueError(
            f"observable on {observable.num_qubits} qubits, state on "
            f"{state.num_qubits}"
        )
    total = 0.0
    for coeff, word in observable.terms:
        hpsi = apply_pauli_word(state, word)
        total += coeff * np.vdot(state.amplitudes, hpsi.amplitudes).real
    return float(total)
