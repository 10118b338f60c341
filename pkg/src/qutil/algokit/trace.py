"""Training trace record shared by all iterative algorithm runs."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class TrainingTrace:
    """Iteration series of (objective, parameter norm) plus the outcome."""

    series: list = field(default_factory=list)  # [(objective, param_norm)]
    final_params: tuple = ()
    converged: bool = False
    warnings: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def final_objective(self) -> float:
        if not self.series:
            raise ValueError("empty trace")
        return self.series[-1][0]

    def to_dict(self) -> dict:
        return {
            "series": [[float(o), float(p)] for o, p in self.series],
            "final_params": [float(x) for x in self.final_params],
            "final_objective": self.final_objective,
            "converged": self.converged,
            "warnings": list(self.warnings),
            "extras": self.extras,
        }
