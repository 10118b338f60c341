"""Optimizers and exact gradients for rotation-parameterized circuits.

Two optimizers are provided:

- coordinate descent: sweeps the parameters one at a time, reconstructing the
  sinusoidal single-parameter cost profile from evaluations at theta and
  theta +/- pi/2 (the parameter-shift points) and jumping to its minimum.
  Deterministic and hyperparameter-free; assumes each parameter slot feeds a
  single rotation gate.
- SPSA: simultaneous-perturbation stochastic approximation, the shot-frugal
  alternative (two evaluations per iteration regardless of dimension).
"""
from __future__ import annotations

import math

import numpy as np

from ..simcore.circuit import Circuit, Gate, normalize_angle
from ..simcore.pauli import PauliSum
from ..simcore.sampling import make_rng
from ..simcore.state import StateVector, apply_gate, expectation

_HALF_PI = math.pi / 2


def _state_with_gate_offset(circuit: Circuit, params, occurrence: int, offset: float) -> StateVector:
    """Run the bound circuit with one extra angle offset on gate #occurrence."""
    bound = circuit.bind(params)
    state = StateVector.zero(bound.num_qubits)
    for idx, g in enumerate(bound.gates):
        if idx == occurrence:
            g = Gate(g.kind, g.targets, angle=g.angle + offset)
        state = apply_gate(state, g)
    return state


def parameter_shift_gradient(circuit: Circuit, params, observable: PauliSum) -> np.ndarray:
    """Exact gradient of <H> via the parameter-shift rule.

    Handles parameter slots reused by several gates by summing the
    per-occurrence shift terms.
    """
    params = np.asarray(params, dtype=float)
    grad = np.zeros(circuit.num_params)
    for idx, g in enumerate(circuit.gates):
        if g.param_slot is None:
            continue
        plus = expectation(_state_with_gate_offset(circuit, params, idx, _HALF_PI), observable)
        minus = expectation(_state_with_gate_offset(circuit, params, idx, -_HALF_PI), observable)
        grad[g.param_slot] += 0.5 * (plus - minus)
    return grad


def rotosolve_step(objective, params: np.ndarray, slot: int) -> tuple[np.ndarray, float]:
    """Jump parameter `slot` to the minimum of its sinusoidal cost profile.

    Uses evaluations at theta and theta +/- pi/2. Returns (new params, new
    objective value).
    """
    theta = params[slot]
    e0 = objective(params)
    p = params.copy()
    p[slot] = theta + _HALF_PI
    e_plus = objective(p)
    p[slot] = theta - _HALF_PI
    e_minus = objective(p)
    shift = math.atan2(2.0 * e0 - e_plus - e_minus, e_plus - e_minus)
    p[slot] = normalize_angle(theta - _HALF_PI - shift)
    return p, objective(p)


def coordinate_descent(
    objective,
    initial_params,
    sweeps: int = 50,
    tol: float = 1e-10,
):
    """Rotosolve-style coordinate descent. Returns (params, history, converged)."""
    params = np.asarray(initial_params, dtype=float).copy()
    history = [objective(params)]
    converged = False
    for _ in range(sweeps):
        for slot in range(len(params)):
            params, value = rotosolve_step(objective, params, slot)
        history.append(value)
        if abs(history[-2] - history[-1]) < tol:
            converged = True
            break
    return params, history, converged


def spsa_minimize(
    objective,
    initial_params,
    iterations: int = 200,
    seed: int = 0,
    a: float = 0.2,
    c: float = 0.2,
    alpha: float = 0.602,
    gamma: float = 0.101,
):
    """Standard SPSA with Rademacher perturbations.

    Returns (params, history, converged). history holds the objective at the
    current iterate (evaluated once per iteration).
    """
    rng = make_rng(seed)
    params = np.asarray(initial_params, dtype=float).copy()
    best = params.copy()
    best_val = objective(params)
    history = [best_val]
    for k in range(iterations):
        ak = a / (k + 1) ** alpha
        ck = c / (k + 1) ** gamma
        delta = rng.choice([-1.0, 1.0], size=len(params))
        plus = objective(params + ck * delta)
        minus = objective(params - ck * delta)
        ghat = (plus - minus) / (2.0 * ck) * delta
        params = params - ak * ghat
        value = objective(params)
        history.append(value)
        if value < best_val:
            best_val, best = value, params.copy()
    return best, history, False
