"""SWaP-C aware performance scoring and head-to-head utility verdicts.

Two scores: score1 divides a benchmark performance number by energy
(runtime x power); score2 additionally divides by device volume. Verdicts
compare a candidate run against a baseline run, but only after a similarity
gate confirms the two devices have comparable volume, weight, and cost
(pairwise ratio within a configurable factor, default 2). "Uses less power"
is interpreted as consuming less total energy; instantaneous power alone
would reward slow low-power runs that burn more energy overall.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

DEFAULT_SIMILARITY_FACTOR = 2.0


@dataclass(frozen=True)
class DeviceSpec:
    name: str
    power_watts: float
    volume_liters: float
    weight_kg: float
    cost_currency_units: float
    qubit_count: int | None = None
    native_gates: tuple | None = None  # (one_qubit kinds, two_qubit kinds)
    topology: str | None = None

    def __post_init__(self):
        for attr in ("power_watts", "volume_liters", "weight_kg"):
            if getattr(self, attr) <= 0:
                raise ValueError(f"{attr} must be positive")
        if self.cost_currency_units < 0:
            raise ValueError("cost_currency_units must be non-negative")

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "power_watts": self.power_watts,
            "volume_liters": self.volume_liters,
            "weight_kg": self.weight_kg,
            "cost_currency_units": self.cost_currency_units,
        }
        if self.qubit_count is not None:
            d["qubit_count"] = self.qubit_count
        if self.native_gates is not None:
            d["native_gates"] = [list(self.native_gates[0]), list(self.native_gates[1])]
        if self.topology is not None:
            d["topology"] = self.topology
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DeviceSpec":
        natives = d.get("native_gates")
        return cls(
            name=d["name"],
            power_watts=float(d["power_watts"]),
            volume_liters=float(d["volume_liters"]),
            weight_kg=float(d["weight_kg"]),
            cost_currency_units=float(d["cost_currency_units"]),
            qubit_count=d.get("qubit_count"),
            native_gates=(tuple(natives[0]), tuple(natives[1])) if natives else None,
            topology=d.get("topology"),
        )


def devicespec_from_json(text: str) -> DeviceSpec:
    return DeviceSpec.from_dict(json.loads(text))


def devicespec_to_json(spec: DeviceSpec) -> str:
    return json.dumps(spec.to_dict(), sort_keys=True, indent=2)


@dataclass(frozen=True)
class RunOutcome:
    performance: float
    runtime_seconds: float
    accuracy_error: float
    device: DeviceSpec
    metric: str = "mirror_success_per_second"

    def __post_init__(self):
        if self.performance <= 0:
            raise ValueError("performance must be positive")
        if self.runtime_seconds <= 0:
            raise ValueError("runtime_seconds must be positive")
        if self.accuracy_error < 0:
            raise ValueError("accuracy_error must be non-negative")

    @property
    def energy_joules(self) -> float:
        return self.runtime_seconds * self.device.power_watts

    def to_dict(self) -> dict:
        return {
            "performance": self.performance,
            "runtime_seconds": self.runtime_seconds,
            "accuracy_error": self.accuracy_error,
            "energy_joules": self.energy_joules,
            "metric": self.metric,
            "device": self.device.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunOutcome":
        return cls(
            performance=float(d["performance"]),
            runtime_seconds=float(d["runtime_seconds"]),
            accuracy_error=float(d["accuracy_error"]),
            device=DeviceSpec.from_dict(d["device"]),
            metric=d.get("metric", "mirror_success_per_second"),
        )


class Verdict(str, Enum):
    quantum_utility = "quantum_utility"
    no_utility = "no_utility"
    not_comparable = "not_comparable"


@dataclass(frozen=True)
class UtilityVerdict:
    comparable: bool
    criteria: dict  # {"faster": bool, "less_energy": bool, "more_accurate": bool}
    verdict: Verdict
    inputs: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "comparable": self.comparable,
            "criteria": dict(self.criteria),
            "verdict": self.verdict.value,
            "inputs": self.inputs,
        }

    def to_markdown(self) -> str:
        lines = [
            "## Utility verdict",
            "",
            f"**Verdict:** `{self.verdict.value}`",
            "",
            f"- comparable devices: {self.comparable}",
        ]
        for key, val in self.criteria.items():
            lines.append(f"- {key}: {val}")
        if self.inputs:
            lines.append("")
            lines.append("### Inputs")
            lines.append("```json")
            lines.append(json.dumps(self.inputs, sort_keys=True, indent=2))
            lines.append("```")
        return "\n".join(lines) + "\n"


def _check_positive(**kwargs):
    for name, val in kwargs.items():
        if val <= 0:
            raise ValueError(f"{name} must be positive, got {val}")


def score1(performance: float, runtime_seconds: float, power_watts: float) -> float:
    """Performance per joule: performance / (runtime x power)."""
    _check_positive(
        performance=performance,
        runtime_seconds=runtime_seconds,
        power_watts=power_watts,
    )
    return performance / (runtime_seconds * power_watts)


def score2(
    performance: float,
    volume_liters: float,
    runtime_seconds: float,
    power_watts: float,
) -> float:
    """Volume-penalized variant: performance / (volume x runtime x power)."""
    _check_positive(
        performance=performance,
        volume_liters=volume_liters,
        runtime_seconds=runtime_seconds,
        power_watts=power_watts,
    )
    return performance / (volume_liters * runtime_seconds * power_watts)


def similarity_gate(
    a: DeviceSpec, b: DeviceSpec, factor: float = DEFAULT_SIMILARITY_FACTOR
) -> bool:
    """True iff volume, weight, and cost are each within a multiplicative
    factor of each other. A zero cost is only similar to another zero cost."""
    if factor < 1:
        raise ValueError("similarity factor must be >= 1")

    def within(x: float, y: float) -> bool:
        if x == 0.0 or y == 0.0:
            return x == y
        ratio = x / y if x >= y else y / x
        return ratio <= factor

    return (
        within(a.volume_liters, b.volume_liters)
        and within(a.weight_kg, b.weight_kg)
        and within(a.cost_currency_units, b.cost_currency_units)
    )


def utility_verdict(
    q: RunOutcome, c: RunOutcome, factor: float = DEFAULT_SIMILARITY_FACTOR
) -> UtilityVerdict:
    """Compare a candidate run q against a baseline run c.

    quantum_utility requires the similarity gate to pass and at least one
    strict win: faster, less total energy, or more accurate. All criterion
    flags use strict inequalities, so identical outcomes yield no_utility.
    """
    if q.metric != c.metric:
        raise ValueError(
            f"cannot compare outcomes with different metrics: "
            f"{q.metric!r} vs {c.metric!r}"
        )
    comparable = similarity_gate(q.device, c.device, factor)
    criteria = {
        "faster": q.runtime_seconds < c.runtime_seconds,
        "less_energy": q.energy_joules < c.energy_joules,
        "more_accurate": q.accuracy_error < c.accuracy_error,
    }
    if not comparable:
        verdict = Verdict.not_comparable
    elif any(criteria.values()):
        verdict = Verdict.quantum_utility
    else:
        verdict = Verdict.no_utility
    return UtilityVerdict(
        comparable=comparable,
        criteria=criteria,
        verdict=verdict,
        inputs={
            "candidate": q.to_dict(),
            "baseline": c.to_dict(),
            "similarity_factor": factor,
        },
    )
