"""Gate and circuit containers plus the JSON interchange format.

Circuit JSON: {"num_qubits": int, "num_params": int,
               "gates": [{"kind": str, "targets": [int], "angle": float}
                         or {"kind": str, "targets": [int], "param_slot": int}
                         or {"kind": str, "targets": [int]}]}
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum


class GateKind(str, Enum):
    RX = "RX"
    RY = "RY"
    RZ = "RZ"
    X = "X"
    Y = "Y"
    Z = "Z"
    H = "H"
    CZ = "CZ"
    CNOT = "CNOT"
    SWAP = "SWAP"
    CCNOT = "CCNOT"


ROTATION_KINDS = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ})

# qubits each kind acts on
GATE_ARITY = {
    GateKind.RX: 1, GateKind.RY: 1, GateKind.RZ: 1,
    GateKind.X: 1, GateKind.Y: 1, GateKind.Z: 1, GateKind.H: 1,
    GateKind.CZ: 2, GateKind.CNOT: 2, GateKind.SWAP: 2,
    GateKind.CCNOT: 3,
}


class GateError(ValueError):
    """Malformed gate: bad targets or angle/param binding."""


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    targets: tuple[int, ...]
    angle: float | None = None
    param_slot: int | None = None

    def __post_init__(self):
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if len(set(self.targets)) != len(self.targets):
            raise GateError(f"duplicate targets {self.targets} for {kind.value}")
        if len(self.targets) != GATE_ARITY[kind]:
            raise GateError(
                f"{kind.value} takes {GATE_ARITY[kind]} targets, got {len(self.targets)}"
            )
        if any(t < 0 for t in self.targets):
            raise GateError(f"negative target in {self.targets}")
        is_rotation = kind in ROTATION_KINDS
        if is_rotation:
            if (self.angle is None) == (self.param_slot is None):
                raise GateError(
                    f"{kind.value} needs exactly one of angle or param_slot"
                )
        else:
            if self.angle is not None or self.param_slot is not None:
                raise GateError(f"{kind.value} takes no angle or param_slot")

    @property
    def is_parameterized(self) -> bool:
        return self.param_slot is not None


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)
    num_params: int = 0

    def __post_init__(self):
        if self.num_qubits < 1:
            raise GateError("num_qubits must be >= 1")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(t >= self.num_qubits for t in g.targets):
                raise GateError(
                    f"gate {g.kind.value} targets {g.targets} outside "
                    f"[0, {self.num_qubits})"
                )
            if g.param_slot is not None and g.param_slot >= self.num_params:
                raise GateError(
                    f"param_slot {g.param_slot} >= num_params {self.num_params}"
                )

    def depth(self) -> int:
        """Scheduling-layer depth: longest chain of gates sharing qubits."""
        frontier = [0] * self.num_qubits
        for g in self.gates:
            layer = 1 + max(frontier[t] for t in g.targets)
            for t in g.targets:
                frontier[t] = layer
        return max(frontier, default=0)

    def gate_count(self) -> int:
        return len(self.gates)

    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if len(g.targets) == 2)

    def bind(self, params) -> "Circuit":
        """Resolve every param_slot to a concrete angle."""
        if len(params) != self.num_params:
            raise GateError(
                f"expected {self.num_params} parameters, got {len(params)}"
            )
        bound = []
        for g in self.gates:
            if g.param_slot is not None:
                bound.append(Gate(g.kind, g.targets, angle=float(params[g.param_slot])))
            else:
                bound.append(g)
        return Circuit(self.num_qubits, tuple(bound), 0)

    def inverse(self) -> "Circuit":
        """Reversed circuit with each gate inverted.

        Fixed kinds here are all self-inverse; rotations negate the angle.
        Only defined for fully bound circuits.
        """
        inv = []
        for g in reversed(self.gates):
            if g.kind in ROTATION_KINDS:
                if g.param_slot is not None:
                    raise GateError("cannot invert an unbound parameterized gate")
                inv.append(Gate(g.kind, g.targets, angle=-g.angle))
            else:
                inv.append(g)
        return Circuit(self.num_qubits, tuple(inv), 0)


def normalize_angle(theta: float) -> float:
    """Map an angle to (-pi, pi]."""
    theta = math.fmod(theta, 2 * math.pi)
    if theta <= -math.pi:
        theta += 2 * math.pi
    elif theta > math.pi:
        theta -= 2 * math.pi
    return theta


def circuit_to_json(circuit: Circuit) -> str:
    gates = []
    for g in circuit.gates:
        entry: dict = {"kind": g.kind.value, "targets": list(g.targets)}
        if g.angle is not None:
            entry["angle"] = g.angle
        if g.param_slot is not None:
            entry["param_slot"] = g.param_slot
        gates.append(entry)
    doc = {
        "num_qubits": circuit.num_qubits,
        "num_params": circuit.num_params,
        "gates": gates,
    }
    return json.dumps(doc, sort_keys=True)


def circuit_from_json(text: str) -> Circuit:
    doc = json.loads(text)
    gates = tuple(
        Gate(
            GateKind(g["kind"]),
            tuple(g["targets"]),
            angle=g.get("angle"),
            param_slot=g.get("param_slot"),
        )
        for g in doc["gates"]
    )
    return Circuit(int(doc["num_qubits"]), gates, int(doc.get("num_params", 0)))
