"""Lowering to a configurable native gate set.

1-qubit lowering uses Euler-angle decomposition in the a-b-a basis picked
from the native rotation pair (ZYZ, ZXZ, or XYX). CNOT becomes an
H-conjugated CZ (and vice versa), SWAP becomes 3 CNOTs, CCNOT the standard
6-CNOT network. Rotations with |angle| < ANGLE_EPS are elided and all emitted
angles are normalized to (-pi, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..simcore.circuit import (
    Circuit,
    Gate,
    GateKind,
    ROTATION_KINDS,
    normalize_angle,
)
from ..simcore.state import gate_matrix, rotation_matrix

ANGLE_EPS = 1e-12

DEFAULT_ONE_QUBIT = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ})
DEFAULT_TWO_QUBIT = frozenset({GateKind.CZ})

_ENTANGLING = {GateKind.CZ, GateKind.CNOT}


class NonUniversalGateSetError(ValueError):
    """Native set cannot express arbitrary circuits."""


class UnknownGateError(ValueError):
    """Gate kind the compiler cannot lower."""


@dataclass(frozen=True)
class NativeGateSet:
    one_qubit: frozenset = field(default_factory=lambda: DEFAULT_ONE_QUBIT)
    two_qubit: frozenset = field(default_factory=lambda: DEFAULT_TWO_QUBIT)

    def __post_init__(self):
        object.__setattr__(self, "one_qubit", frozenset(GateKind(k) for k in self.one_qubit))
        object.__setattr__(self, "two_qubit", frozenset(GateKind(k) for k in self.two_qubit))
        rotations = self.one_qubit & ROTATION_KINDS
        if len(rotations) < 2:
            raise NonUniversalGateSetError(
                "need at least two rotation kinds to span SU(2), got "
                f"{sorted(k.value for k in rotations)}"
            )
        if not self.two_qubit & _ENTANGLING:
            raise NonUniversalGateSetError(
                "need an entangling 2-qubit gate (CZ or CNOT)"
            )

    def is_native(self, gate: Gate) -> bool:
        if len(gate.targets) == 1:
            return gate.kind in self.one_qubit
        if len(gate.targets) == 2:
            return gate.kind in self.two_qubit
        return False  # CCNOT is never native


def _zyz_angles(unitary: np.ndarray) -> tuple[float, float, float]:
    """(phi, theta, lam) with unitary ~ RZ(phi) RY(theta) RZ(lam)."""
    det = np.linalg.det(unitary)
    u = unitary / np.sqrt(det)
    theta = 2.0 * math.atan2(abs(u[1, 0]), abs(u[0, 0]))
    if abs(u[1, 0]) <= 1e-14:
        phi, lam = 2.0 * float(np.angle(u[1, 1])), 0.0
    elif abs(u[0, 0]) <= 1e-14:
        phi, lam = 2.0 * float(np.angle(u[1, 0])), 0.0
    else:
        plus = 2.0 * float(np.angle(u[1, 1]))
        minus = 2.0 * float(np.angle(u[1, 0]))
        phi, lam = (plus + minus) / 2.0, (plus - minus) / 2.0
    return phi, theta, lam


def _euler_gates(unitary: np.ndarray, qubit: int, natives: NativeGateSet) -> list[Gate]:
    """Lower an arbitrary 1-qubit unitary into native rotations."""
    rot = natives.one_qubit
    if {GateKind.RZ, GateKind.RY} <= rot:
        phi, theta, lam = _zyz_angles(unitary)
        seq = [(GateKind.RZ, lam), (GateKind.RY, theta), (GateKind.RZ, phi)]
    elif {GateKind.RZ, GateKind.RX} <= rot:
        # RY(t) = RZ(pi/2) RX(t) RZ(-pi/2)
        phi, theta, lam = _zyz_angles(unitary)
        seq = [
            (GateKind.RZ, lam - math.pi / 2),
            (GateKind.RX, theta),
            (GateKind.RZ, phi + math.pi / 2),
        ]
    else:  # {RX, RY}: XYX angles via RX(t) = RY(pi/2) RZ(t) RY(-pi/2)
        ry = rotation_matrix(GateKind.RY, math.pi / 2)
        alpha, beta, gamma = _zyz_angles(ry.conj().T @ unitary @ ry)
        seq = [(GateKind.RX, gamma), (GateKind.RY, beta), (GateKind.RX, alpha)]
    gates = []
    for kind, angle in seq:
        angle = normalize_angle(angle)
        if abs(angle) >= ANGLE_EPS:
            gates.append(Gate(kind, (qubit,), angle=angle))
    return gates


# fixed conjugation identities for parameterized rotations, as gate lists
# (applied left to right): kind -> {available rotation pair: (pre, post)}
def _lower_param_rotation(gate: Gate, natives: NativeGateSet) -> list[Gate]:
    rot = natives.one_qubit
    q = gate.targets[0]
    kind = gate.kind

    def wrap(conj_kind, pre_angle, middle_kind):
        pre = Gate(conj_kind, (q,), angle=pre_angle)
        mid = Gate(middle_kind, (q,), param_slot=gate.param_slot)
        post = Gate(conj_kind, (q,), angle=-pre_angle)
        return [pre, mid, post]

    half = math.pi / 2
    if kind == GateKind.RX:
        if {GateKind.RZ, GateKind.RY} <= rot:
            return wrap(GateKind.RZ, half, GateKind.RY)  # RX = RZ(-h) RY RZ(h)
        return wrap(GateKind.RY, -half, GateKind.RZ)  # RX = RY(h) RZ RY(-h)
    if kind == GateKind.RY:
        if {GateKind.RZ, GateKind.RX} <= rot:
            return wrap(GateKind.RZ, -half, GateKind.RX)  # RY = RZ(h) RX RZ(-h)
        return wrap(GateKind.RX, half, GateKind.RZ)  # RY = RX(-h) RZ RX(h)
    # RZ
    if {GateKind.RX, GateKind.RY} <= rot:
        return wrap(GateKind.RX, -half, GateKind.RY)  # RZ = RX(h) RY RX(-h)
    return wrap(GateKind.RY, half, GateKind.RX)  # RZ = RY(-h) RX RY(h)


def _h(q):
    return Gate(GateKind.H, (q,))


def _t(q, sign=1.0):
    return Gate(GateKind.RZ, (q,), angle=sign * math.pi / 4)


def _ccnot_network(a: int, b: int, c: int) -> list[Gate]:
    """Standard Toffoli network with six CNOTs (T as RZ(pi/4) up to phase)."""
    cx = lambda i, j: Gate(GateKind.CNOT, (i, j))
    return [
        _h(c),
        cx(b, c), _t(c, -1),
        cx(a, c), _t(c, +1),
        cx(b, c), _t(c, -1),
        cx(a, c), _t(b, +1), _t(c, +1),
        _h(c),
        cx(a, b), _t(a, +1), _t(b, -1),
        cx(a, b),
    ]


def _lower_two_qubit(gate: Gate, natives: NativeGateSet) -> list[Gate]:
    a, b = gate.targets
    if gate.kind == GateKind.CNOT:
        # CNOT(a->b) = H(b) CZ(a,b) H(b)
        return [_h(b), Gate(GateKind.CZ, (a, b)), _h(b)]
    if gate.kind == GateKind.CZ:
        return [_h(b), Gate(GateKind.CNOT, (a, b)), _h(b)]
    if gate.kind == GateKind.SWAP:
        return [
            Gate(GateKind.CNOT, (a, b)),
            Gate(GateKind.CNOT, (b, a)),
            Gate(GateKind.CNOT, (a, b)),
        ]
    raise UnknownGateError(f"cannot lower {gate.kind.value}")


def _lower_gate(gate: Gate, natives: NativeGateSet) -> list[Gate]:
    if natives.is_native(gate):
        return [gate]
    arity = len(gate.targets)
    if arity == 1:
        if gate.param_slot is not None:
            return _lower_param_rotation(gate, natives)
        unitary = gate_matrix(gate)
        return _euler_gates(unitary, gate.targets[0], natives)
    if arity == 2:
        out = []
        for g in _lower_two_qubit(gate, natives):
            out.extend(_lower_gate(g, natives))
        return out
    # CCNOT: lower to the CNOT network, then lower its pieces
    out = []
    for g in _ccnot_network(*gate.targets):
        out.extend(_lower_gate(g, natives))
    return out


def decompose_to_native(circuit: Circuit, natives: NativeGateSet) -> Circuit:
    """Rewrite the circuit using only native gate kinds.

    A circuit that is already native is returned unchanged.
    """
    if all(natives.is_native(g) for g in circuit.gates):
        return circuit
    gates: list[Gate] = []
    for g in circuit.gates:
        gates.extend(_lower_gate(g, natives))
    return Circuit(circuit.num_qubits, tuple(gates), circuit.num_params)
