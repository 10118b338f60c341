"""Seeded measurement sampling.

RNG contract: numpy's PCG64 seeded with the given integer. PCG64 has a fixed
cross-platform bit stream, so identical (state, shots, seed) triples produce
identical count maps on any machine. Batch runs derive per-circuit seeds as
base_seed + circuit_index.
"""
from __future__ import annotations

import numpy as np

from .state import StateVector


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def bitstring(index: int, num_qubits: int) -> str:
    """Render a basis index with qubit N-1 leftmost."""
    return format(index, f"0{num_qubits}b")


def index_of_bitstring(bits: str) -> int:
    return int(bits, 2)


def sample_counts(state: StateVector, shots: int, seed: int) -> dict[str, int]:
    """Multinomial sample of the measurement distribution.

    Returns only outcomes with nonzero counts.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = state.probabilities()
    probs = probs / probs.sum()
    rng = make_rng(seed)
    counts = rng.multinomial(shots, probs)
    n = state.num_qubits
    return {
        bitstring(i, n): int(c) for i, c in enumerate(counts) if c > 0
    }
