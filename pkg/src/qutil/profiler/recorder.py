"""Event-based resource accounting.

Algorithm runs emit (circuits, shots, depth, size) events into a
ResourceRecorder; profile() folds them into a ResourceProfile. Aggregation is
commutative and associative, so profiles from concurrent workers can be
merged without affecting counts.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field


class IncompleteProfileError(RuntimeError):
    """A run was started but emitted no resource events."""


@dataclass(frozen=True)
class ResourceEvent:
    circuits: int = 1
    shots: int = 0
    depth: int = 0
    size: int | str | None = None


@dataclass
class ResourceRecorder:
    events: list = field(default_factory=list)
    started: bool = False
    _t0: float | None = None
    _elapsed: float = 0.0

    def start(self):
        self.started = True
        self._t0 = time.perf_counter()

    def stop(self):
        if self._t0 is not None:
            self._elapsed += time.perf_counter() - self._t0
            self._t0 = None

    def record(self, circuits: int = 1, shots: int = 0, depth: int = 0, size=None):
        self.events.append(ResourceEvent(circuits, shots, depth, size))

    @property
    def wall_seconds(self) -> float:
        extra = time.perf_counter() - self._t0 if self._t0 is not None else 0.0
        return self._elapsed + extra


@dataclass(frozen=True)
class ResourceProfile:
    circuits_executed: int
    total_shots: int
    max_native_depth: int
    sum_native_depth: int
    wall_runtime_seconds: float
    per_size: dict

    def to_dict(self) -> dict:
        return {
            "circuits_executed": self.circuits_executed,
            "total_shots": self.total_shots,
            "max_native_depth": self.max_native_depth,
            "sum_native_depth": self.sum_native_depth,
            "wall_runtime_seconds": self.wall_runtime_seconds,
            "per_size": {
                str(k): {"circuits": v[0], "depth": v[1], "shots": v[2]}
                for k, v in sorted(self.per_size.items(), key=lambda kv: str(kv[0]))
            },
        }


def profile(recorder: ResourceRecorder) -> ResourceProfile:
    """Fold recorded events into a profile (order-independent)."""
    if recorder.started and not recorder.events:
        raise IncompleteProfileError(
            "run was started but produced no instrumentation events"
        )
    circuits = shots = max_depth = sum_depth = 0
    per_size: dict = {}
    for e in recorder.events:
        circuits += e.circuits
        shots += e.shots
        max_depth = max(max_depth, e.depth)
        sum_depth += e.depth * e.circuits
        if e.size is not None:
            c, d, s = per_size.get(e.size, (0, 0, 0))
            per_size[e.size] = (c + e.circuits, max(d, e.depth), s + e.shots)
    return ResourceProfile(
        circuits_executed=circuits,
        total_shots=shots,
        max_native_depth=max_depth,
        sum_native_depth=sum_depth,
        wall_runtime_seconds=recorder.wall_seconds,
        per_size=per_size,
    )


def merge_profiles(a: ResourceProfile, b: ResourceProfile) -> ResourceProfile:
    per_size = dict(a.per_size)
    for k, (c, d, s) in b.per_size.items():
        c0, d0, s0 = per_size.get(k, (0, 0, 0))
        per_size[k] = (c0 + c, max(d0, d), s0 + s)
    return ResourceProfile(
        circuits_executed=a.circuits_executed + b.circuits_executed,
        total_shots=a.total_shots + b.total_shots,
        max_native_depth=max(a.max_native_depth, b.max_native_depth),
        sum_native_depth=a.sum_native_depth + b.sum_native_depth,
        wall_runtime_seconds=a.wall_runtime_seconds + b.wall_runtime_seconds,
        per_size=per_size,
    )
