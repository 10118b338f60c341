"""Quantum utility benchmark harness.

Conventions used throughout the package:

- Qubit 0 is the least-significant bit of the basis-state index.
- Bitstrings are rendered most-significant qubit first, i.e. the leftmost
  character of a rendered bitstring is qubit N-1.
- Pauli words follow the same rendering order: word[i] acts on qubit N-1-i.
- State equality is always up to a global phase.
- Randomness comes from numpy's PCG64 generator; seeding is explicit
  everywhere and batch runs derive per-circuit seeds as base_seed + index.
"""

__version__ = "0.1.0"
