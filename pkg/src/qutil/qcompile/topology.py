"""Qubit connectivity graphs: linear, circular, near-square grid, all-to-all."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class TopologyKind(str, Enum):
    linear = "linear"
    circular = "circular"
    grid_nn = "grid_nn"
    all_to_all = "all_to_all"


def _grid_shape(n: int) -> tuple[int, int]:
    """Smallest near-square grid with at least n sites."""
    cols = math.ceil(math.sqrt(n))
    rows = math.ceil(n / cols)
    return rows, cols


@dataclass(frozen=True)
class Topology:
    kind: TopologyKind
    num_qubits: int

    def __post_init__(self):
        object.__setattr__(self, "kind", TopologyKind(self.kind))
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be >= 1")

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        n = self.num_qubits
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"qubits ({i}, {j}) outside [0, {n})")
        if self.kind == TopologyKind.all_to_all:
            return True
        if self.kind == TopologyKind.linear:
            return abs(i - j) == 1
        if self.kind == TopologyKind.circular:
            return abs(i - j) == 1 or abs(i - j) == n - 1
        rows, cols = _grid_shape(n)
        ri, ci = divmod(i, cols)
        rj, cj = divmod(j, cols)
        return abs(ri - rj) + abs(ci - cj) == 1

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.num_qubits) if self.adjacent(i, j)]

    def shortest_path(self, start: int, goal: int) -> list[int]:
        """BFS path including both endpoints; deterministic tie-breaking by
        lowest neighbor index."""
        if start == goal:
            return [start]
        prev = {start: None}
        frontier = [start]
        while frontier:
            nxt = []
            for node in frontier:
                for nb in self.neighbors(node):
                    if nb not in prev:
                        prev[nb] = node
                        nxt.append(nb)
            if goal in prev:
                break
            frontier = nxt
        if goal not in prev:
            raise ValueError(f"no path from {start} to {goal}")
        path = [goal]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return list(reversed(path))
