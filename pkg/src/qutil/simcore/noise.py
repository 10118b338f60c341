"""Depolarizing trajectory noise.

Per-shot stochastic unraveling: after each gate, with probability p1 (1-qubit
gates) or p2 (multi-qubit gates), a uniformly random non-identity Pauli on the
gate's targets is inserted. Memory stays at one statevector (2^N amplitudes);
this is not a density-matrix simulator.

p1 = p2 = 0 short-circuits to the ideal path, so the noiseless limit is
bit-exact with sample_counts over run_statevector.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .sampling import bitstring, make_rng, sample_counts
from .state import StateVector, apply_gate, run_statevector

_PAULI_KINDS = (GateKind.X, GateKind.Y, GateKind.Z)


@dataclass(frozen=True)
class NoiseModel:
    """p1: depolarizing probability after each 1-qubit gate; p2: after each
    multi-qubit gate."""

    p1: float = 0.0
    p2: float = 0.0

    def __post_init__(self):
        for name, p in (("p1", self.p1), ("p2", self.p2)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")

    @property
    def is_trivial(self) -> bool:
        return self.p1 == 0.0 and self.p2 == 0.0


def _insert_random_pauli(state: StateVector, targets, rng) -> StateVector:
    # uniform over the 4^k - 1 non-identity Pauli strings on the targets
    k = len(targets)
    choice = int(rng.integers(1, 4**k))
    for q in targets:
        letter = choice % 4
        choice //= 4
        if letter:
            state = apply_gate(state, Gate(_PAULI_KINDS[letter - 1], (q,)))
    return state


def run_noisy(
    circuit: Circuit,
    params,
    noise: NoiseModel,
    shots: int,
    seed: int,
) -> dict[str, int]:
    """Per-shot trajectory simulation under depolarizing noise."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if noise.is_trivial:
        return sample_counts(run_statevector(circuit, params), shots, seed)

    bound = circuit.bind(params) if circuit.num_params else circuit
    rng = make_rng(seed)
    n = bound.num_qubits
    counts: dict[str, int] = {}
    for _ in range(shots):
        state = StateVector.zero(n)
        for g in bound.gates:
            state = apply_gate(state, g)
            p = noise.p1 if len(g.targets) == 1 else noise.p2
            if p > 0.0 and rng.random() < p:
                state = _insert_random_pauli(state, g.targets, rng)
        probs = state.probabilities()
        probs = probs / probs.sum()
        outcome = int(rng.choice(len(probs), p=probs))
        key = bitstring(outcome, n)
        counts[key] = counts.get(key, 0) + 1
    return counts
