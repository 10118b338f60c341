"""Empirical asymptotic classification of (size, count) samples.

Candidates: c, a*n, a*n^2, a*n^3, a*b^n. All candidates are fitted by least
squares on log(count): polynomial classes fix their exponent and fit only
the log-prefactor (log-log transform); the exponential fits a semilog line.
Scoring uses the shared-response R^2 minus a flat per-model penalty, and a
higher-complexity class must beat the incumbent by a margin of MARGIN, so
ties and near-ties resolve toward the simpler class. Small-sample fits are
the norm at desk scale, which is why selection is margin-based rather than
information-criterion-based.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

MIN_SAMPLES = 4
PARAM_PENALTY = 0.05
MARGIN = 0.02


class ScalingClass(str, Enum):
    constant = "constant"
    linear = "linear"
    poly_2 = "poly_2"
    poly_3 = "poly_3"
    exponential = "exponential"


# complexity order, lowest first
_ORDER = [
    ScalingClass.constant,
    ScalingClass.linear,
    ScalingClass.poly_2,
    ScalingClass.poly_3,
    ScalingClass.exponential,
]

_POLY_EXPONENT = {
    ScalingClass.constant: 0,
    ScalingClass.linear: 1,
    ScalingClass.poly_2: 2,
    ScalingClass.poly_3: 3,
}


@dataclass(frozen=True)
class ScalingFit:
    variable: str
    samples: tuple
    best_class: ScalingClass
    r_squared: dict
    scores: dict
    coefficients: dict

    def to_dict(self) -> dict:
        return {
            "variable": self.variable,
            "samples": [[float(n), float(c)] for n, c in self.samples],
            "best_class": self.best_class.value,
            "r_squared": {k.value: v for k, v in self.r_squared.items()},
            "scores": {k.value: v for k, v in self.scores.items()},
            "coefficients": {
                k.value: list(v) for k, v in self.coefficients.items()
            },
        }


def _log_fit(cls: ScalingClass, n: np.ndarray, log_y: np.ndarray):
    """Original-space coefficients and log-space predictions."""
    if cls == ScalingClass.exponential:
        slope, intercept = np.polyfit(n, log_y, 1)
        return (math.exp(intercept), math.exp(slope)), intercept + slope * n
    k = _POLY_EXPONENT[cls]
    basis = k * np.log(n)
    intercept = float(np.mean(log_y - basis))
    return (math.exp(intercept),), intercept + basis


def _r_squared(y: np.ndarray, pred: np.ndarray) -> float:
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    # constant responses leave only rounding noise in ss_tot; treat as exact
    if ss_tot <= 1e-12:
        return 1.0 if ss_res <= 1e-12 else 0.0
    return 1.0 - ss_res / ss_tot


def fit_scaling(samples, variable: str = "n") -> ScalingFit:
    samples = tuple((float(n), float(c)) for n, c in samples)
    sizes = sorted({n for n, _ in samples})
    if len(sizes) < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} distinct sizes, got {len(sizes)}")
    if any(n <= 0 for n, _ in samples) or any(c <= 0 for _, c in samples):
        raise ValueError("sizes and counts must be positive")
    n = np.array([s for s, _ in samples], dtype=float)
    log_y = np.log([c for _, c in samples])

    r2: dict = {}
    scores: dict = {}
    coeffs: dict = {}
    for cls in _ORDER:
        coeff, pred = _log_fit(cls, n, log_y)
        r2[cls] = _r_squared(log_y, pred)
        scores[cls] = r2[cls] - PARAM_PENALTY
        coeffs[cls] = coeff

    best = _ORDER[0]
    for cls in _ORDER[1:]:
        if scores[cls] > scores[best] + MARGIN:
            best = cls
    return ScalingFit(
        variable=variable,
        samples=samples,
        best_class=best,
        r_squared=r2,
        scores=scores,
        coefficients=coeffs,
    )
