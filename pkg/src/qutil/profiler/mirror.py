"""Mirror-circuit fidelity benchmark.

A circuit C is followed by a random Pauli layer P and a quasi-inverse of C
adapted to P: the inverse gate sequence with each rotation's sign flipped
whenever the tracked Pauli frame anticommutes with its generator, while
Clifford gates conjugate the frame. The net unitary is a Pauli, so ideal
execution lands on one classically-tracked bitstring; the success rate is
the fraction of shots hitting it.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..simcore.circuit import Circuit, Gate, GateKind
from ..simcore.noise import NoiseModel, run_noisy
from ..simcore.sampling import make_rng

MAX_MIRROR_QUBITS = 12

_PAULI_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_GEN_XZ = {GateKind.RX: (1, 0), GateKind.RY: (1, 1), GateKind.RZ: (0, 1)}


class MirrorUnsupportedGateError(ValueError):
    """Gate kind whose quasi-inverse is not implemented (CCNOT)."""


@dataclass(frozen=True)
class MirrorResult:
    size: int
    depth: int
    success_probability: float
    shots: int
    noise: NoiseModel


def random_pauli_layer(num_qubits: int, seed: int) -> str:
    """Uniform word over {I,X,Y,Z}^N, rendered qubit N-1 first."""
    rng = make_rng(seed)
    return "".join(rng.choice(list("IXYZ")) for _ in range(num_qubits))


def _frame_conjugate(x: list[int], z: list[int], gate: Gate):
    """Update the Pauli frame (sign ignored) under a self-inverse Clifford."""
    kind, t = gate.kind, gate.targets
    if kind == GateKind.H:
        q = t[0]
        x[q], z[q] = z[q], x[q]
    elif kind in (GateKind.X, GateKind.Y, GateKind.Z):
        pass
    elif kind == GateKind.CNOT:
        c, tt = t
        x[tt] ^= x[c]
        z[c] ^= z[tt]
    elif kind == GateKind.CZ:
        a, b = t
        z[a], z[b] = z[a] ^ x[b], z[b] ^ x[a]
    elif kind == GateKind.SWAP:
        a, b = t
        x[a], x[b] = x[b], x[a]
        z[a], z[b] = z[b], z[a]
    else:
        raise MirrorUnsupportedGateError(f"cannot mirror {kind.value}")


def build_mirror(circuit: Circuit, pauli_word: str) -> tuple[Circuit, str]:
    """Mirror circuit and the target bitstring its ideal run must produce."""
    if circuit.num_params:
        raise ValueError("bind parameters before mirroring")
    n = circuit.num_qubits
    if len(pauli_word) != n:
        raise ValueError("pauli word length mismatch")

    gates = list(circuit.gates)
    for i, letter in enumerate(pauli_word):
        if letter != "I":
            gates.append(Gate(GateKind(letter), (n - 1 - i,)))

    # frame in symplectic form, indexed by qubit
    x = [0] * n
    z = [0] * n
    for i, letter in enumerate(pauli_word):
        fx, fz = _PAULI_XZ[letter]
        x[n - 1 - i], z[n - 1 - i] = fx, fz

    for g in reversed(circuit.gates):
        if g.kind in _GEN_XZ:
            gx, gz = _GEN_XZ[g.kind]
            q = g.targets[0]
            anticommutes = (x[q] & gz) ^ (z[q] & gx)
            angle = g.angle if anticommutes else -g.angle
            gates.append(Gate(g.kind, g.targets, angle=angle))
        else:
            _frame_conjugate(x, z, g)
            gates.append(g)

    target = "".join("1" if x[n - 1 - i] else "0" for i in range(n))
    return Circuit(n, tuple(gates), 0), target


def mirror_benchmark(
    circuit_family: dict[int, Circuit],
    noise: NoiseModel,
    shots: int,
    seed: int,
) -> list[MirrorResult]:
    """Run the mirror benchmark per family size; Pauli layers use a fixed
    seed per size (seed + size)."""
    results = []
    for size in sorted(circuit_family):
        circuit = circuit_family[size]
        if circuit.num_qubits > MAX_MIRROR_QUBITS:
            raise ValueError(f"mirror limit is {MAX_MIRROR_QUBITS} qubits")
        pauli = random_pauli_layer(circuit.num_qubits, seed + size)
        mirror, target = build_mirror(circuit, pauli)
        counts = run_noisy(mirror, (), noise, shots, seed + size)
        success = counts.get(target, 0) / shots
        results.append(
            MirrorResult(
                size=size,
                depth=mirror.depth(),
                success_probability=success,
                shots=shots,
                noise=noise,
            )
        )
    return results
