"""Statevector simulator: exact expectations, seeded sampling, trajectory noise."""

from .circuit import Circuit, Gate, GateKind, circuit_from_json, circuit_to_json
from .pauli import PauliSum, paulisum_from_text, paulisum_to_text
from .state import StateVector, apply_gate, run_statevector, expectation
from .sampling import sample_counts, make_rng, bitstring, index_of_bitstring
from .noise import NoiseModel, run_noisy

__all__ = [
    "Circuit",
    "Gate",
    "GateKind",
    "NoiseModel",
    "PauliSum",
    "StateVector",
    "apply_gate",
    "bitstring",
    "circuit_from_json",
    "circuit_to_json",
    "expectation",
    "index_of_bitstring",
    "make_rng",
    "paulisum_from_text",
    "paulisum_to_text",
    "run_noisy",
    "run_statevector",
    "sample_counts",
]
