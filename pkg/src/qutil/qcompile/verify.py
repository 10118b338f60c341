"""Brute-force unitary equivalence checking (the compile-test oracle)."""
from __future__ import annotations

import numpy as np

from ..simcore.circuit import Circuit
from ..simcore.sampling import make_rng
from ..simcore.state import gate_matrix

MAX_VERIFY_QUBITS = 10
_TOL = 1e-10


class VerifyTooLargeError(ValueError):
    """Circuit too wide for brute-force verification."""


def _apply_batch(amps: np.ndarray, n: int, unitary: np.ndarray, targets) -> np.ndarray:
    """Apply a k-qubit unitary to every column of a (2^n, m) array."""
    k = len(targets)
    m = amps.shape[1]
    axes = [n - 1 - q for q in targets]
    psi = amps.reshape((2,) * n + (m,))
    psi = np.moveaxis(psi, axes, range(k))
    shape = psi.shape
    psi = unitary @ psi.reshape(2**k, -1)
    psi = np.moveaxis(psi.reshape(shape), range(k), axes)
    return np.ascontiguousarray(psi).reshape(2**n, m)


def circuit_unitary(circuit: Circuit, params=()) -> np.ndarray:
    """Dense unitary of a circuit (brute force, small N only)."""
    n = circuit.num_qubits
    if n > MAX_VERIFY_QUBITS:
        raise VerifyTooLargeError(f"{n} qubits exceeds brute-force limit")
    bound = circuit.bind(params) if circuit.num_params else circuit
    u = np.eye(2**n, dtype=complex)
    for g in bound.gates:
        u = _apply_batch(u, n, gate_matrix(g), g.targets)
    return u


def verify_equivalence(
    a: Circuit,
    b: Circuit,
    qubit_map: tuple[int, ...] | None = None,
) -> bool:
    """True iff b equals a up to one common global phase, after undoing
    qubit_map (b's logical-to-physical placement).

    b may act on more qubits than a; the extras must stay in |0>. Any
    parameter slots are bound to one shared pseudo-random vector.
    """
    if a.num_qubits > b.num_qubits:
        return False
    if a.num_params != b.num_params:
        return False
    if max(a.num_qubits, b.num_qubits) > MAX_VERIFY_QUBITS:
        raise VerifyTooLargeError("too many qubits for brute-force check")

    params = ()
    if a.num_params:
        params = make_rng(12345).uniform(-np.pi, np.pi, size=a.num_params)

    ua = circuit_unitary(a, params)
    ub = circuit_unitary(b, params)

    n = a.num_qubits
    if qubit_map is None:
        qubit_map = tuple(range(b.num_qubits))
    # row_map[z] = physical basis index holding logical basis index z
    row_map = np.zeros(2**n, dtype=np.int64)
    for z in range(2**n):
        y = 0
        for l in range(n):
            if (z >> l) & 1:
                y |= 1 << qubit_map[l]
        row_map[z] = y

    # columns: logical basis states; routing starts from identity placement,
    # so physical input index equals logical index with extras in |0>
    cols = np.arange(2**n)
    sub = ub[np.ix_(row_map, cols)]

    # common global phase from the largest reference entry
    idx = np.unravel_index(np.argmax(np.abs(ua)), ua.shape)
    if abs(ua[idx]) < _TOL:
        return False
    phase = sub[idx] / ua[idx]
    if abs(abs(phase) - 1.0) > 1e-6:
        return False
    if not np.allclose(ua * phase, sub, atol=_TOL, rtol=0.0):
        return False
    # leakage outside the mapped block must vanish
    other_rows = np.setdiff1d(np.arange(2**b.num_qubits), row_map)
    if other_rows.size and np.abs(ub[np.ix_(other_rows, cols)]).max() > _TOL:
        return False
    return True
