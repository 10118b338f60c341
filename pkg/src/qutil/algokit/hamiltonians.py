"""Benchmark Hamiltonians, dense diagonalization, and term grouping."""
from __future__ import annotations

import numpy as np

from ..simcore.pauli import PauliSum

MAX_DENSE_QUBITS = 12


def tfim_chain(num_qubits: int, g: float = 1.0) -> PauliSum:
    """Transverse-field Ising chain: -sum ZZ - g * sum X (open boundary)."""
    if num_qubits < 2:
        raise ValueError("chain needs at least 2 sites")
    n = num_qubits
    terms = []
    for q in range(n - 1):
        word = ["I"] * n
        word[n - 1 - q] = "Z"
        word[n - 1 - (q + 1)] = "Z"
        terms.append((-1.0, "".join(word)))
    for q in range(n):
        word = ["I"] * n
        word[n - 1 - q] = "X"
        terms.append((-g, "".join(word)))
    return PauliSum(n, tuple(terms))


def _word_action(word: str):
    """Signed-permutation action of a Pauli word on basis indices.

    Returns (rows, phases): word |x> = phases[x] |rows[x]>.
    word[i] acts on qubit n-1-i (rendering convention).
    """
    n = len(word)
    x = np.arange(2**n, dtype=np.int64)
    rows = x.copy()
    phases = np.ones(2**n, dtype=complex)
    for i, letter in enumerate(word):
        if letter == "I":
            continue
        q = n - 1 - i
        bit = (x >> q) & 1
        if letter == "Z":
            phases *= 1.0 - 2.0 * bit
        elif letter == "X":
            rows ^= 1 << q
        else:  # Y
            rows ^= 1 << q
            phases *= 1j * (1.0 - 2.0 * bit)
    return rows, phases


def dense_matrix(h: PauliSum) -> np.ndarray:
    """Dense 2^N x 2^N matrix of a Pauli sum."""
    if h.num_qubits > MAX_DENSE_QUBITS:
        raise ValueError(
            f"{h.num_qubits} qubits exceeds the dense limit of {MAX_DENSE_QUBITS}"
        )
    dim = 2**h.num_qubits
    m = np.zeros((dim, dim), dtype=complex)
    cols = np.arange(dim)
    for coeff, word in h.terms:
        rows, phases = _word_action(word)
        m[rows, cols] += coeff * phases
    return m


def exact_ground_energy(h: PauliSum) -> float:
    """Minimum eigenvalue by dense diagonalization (classical oracle)."""
    return float(np.linalg.eigvalsh(dense_matrix(h))[0])


def _qwc_compatible(rep: list[str], word: str) -> bool:
    return all(r == "I" or w == "I" or r == w for r, w in zip(rep, word))


def group_pauli_terms(h: PauliSum) -> list[list[tuple[float, str]]]:
    """Greedy qubit-wise-commuting grouping.

    Each group's terms agree (or are identity) letter-by-letter, so one
    measurement circuit per group suffices. Greedy, not optimal; group
    counts are measured, never assumed.
    """
    groups: list[list[tuple[float, str]]] = []
    reps: list[list[str]] = []
    for coeff, word in h.terms:
        for group, rep in zip(groups, reps):
            if _qwc_compatible(rep, word):
                group.append((coeff, word))
                for i, w in enumerate(word):
                    if w != "I":
                        rep[i] = w
                break
        else:
            groups.append([(coeff, word)])
            reps.append(list(word))
    return groups


def group_basis(group: list[tuple[float, str]]) -> str:
    """Combined measurement basis letter per rendered position."""
    n = len(group[0][1])
    rep = ["I"] * n
    for _, word in group:
        for i, w in enumerate(word):
            if w != "I":
                rep[i] = w
    return "".join(rep)
