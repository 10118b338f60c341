"""Greedy SWAP-insertion routing and the full compile pipeline.

Routing moves the lower-indexed logical qubit of a non-adjacent 2-qubit gate
along a shortest adjacency path until the pair is adjacent. The original
qubit order is not restored; the final logical-to-physical placement is
carried in CompiledCircuit.qubit_map and must be applied when interpreting
measurement results.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..simcore.circuit import Circuit, Gate, GateKind
from .natives import NativeGateSet, decompose_to_native
from .topology import Topology, TopologyKind


class RoutingError(ValueError):
    """Circuit does not fit the topology."""


@dataclass(frozen=True)
class CompileStats:
    native_depth: int
    two_qubit_count: int
    swap_inserted: int
    gate_count: int

    def to_dict(self) -> dict:
        return {
            "native_depth": self.native_depth,
            "two_qubit_count": self.two_qubit_count,
            "swap_inserted": self.swap_inserted,
            "gate_count": self.gate_count,
        }


@dataclass(frozen=True)
class CompiledCircuit:
    circuit: Circuit
    qubit_map: tuple[int, ...]  # qubit_map[logical] = physical
    stats: CompileStats


def _stats_for(circuit: Circuit, swap_inserted: int) -> CompileStats:
    return CompileStats(
        native_depth=circuit.depth(),
        two_qubit_count=circuit.two_qubit_count(),
        swap_inserted=swap_inserted,
        gate_count=circuit.gate_count(),
    )


def route_to_topology(circuit: Circuit, topo: Topology) -> CompiledCircuit:
    """Make every 2-qubit gate act on adjacent physical qubits.

    CCNOT gates must be lowered before routing (SWAP costs are counted on
    2-qubit gates only).
    """
    if circuit.num_qubits > topo.num_qubits:
        raise RoutingError(
            f"circuit needs {circuit.num_qubits} qubits, topology has "
            f"{topo.num_qubits}"
        )
    if any(len(g.targets) > 2 for g in circuit.gates):
        raise RoutingError("lower multi-qubit gates before routing")

    placement = list(range(topo.num_qubits))  # placement[logical] = physical
    routed: list[Gate] = []
    swaps = 0
    for g in circuit.gates:
        if len(g.targets) == 1:
            routed.append(Gate(g.kind, (placement[g.targets[0]],),
                               angle=g.angle, param_slot=g.param_slot))
            continue
        a, b = g.targets
        mover = min(a, b)  # move the lower-indexed logical qubit
        other = a + b - mover
        pa, pb = placement[mover], placement[other]
        if not topo.adjacent(pa, pb):
            path = topo.shortest_path(pa, pb)
            # hop the mover along the path until adjacent to the other qubit
            inverse = {p: l for l, p in enumerate(placement)}
            for step in path[1:-1]:
                here = placement[mover]
                routed.append(Gate(GateKind.SWAP, (here, step)))
                swaps += 1
                l_other = inverse[step]
                placement[mover], placement[l_other] = step, here
                inverse[here], inverse[step] = l_other, mover
        phys = (placement[a], placement[b])
        routed.append(Gate(g.kind, phys, angle=g.angle, param_slot=g.param_slot))

    out = Circuit(topo.num_qubits, tuple(routed), circuit.num_params)
    return CompiledCircuit(out, tuple(placement), _stats_for(out, swaps))


def compile_circuit(
    circuit: Circuit,
    natives: NativeGateSet | None = None,
    topo: Topology | None = None,
) -> CompiledCircuit:
    """decompose -> route -> decompose; stats reflect the final circuit."""
    natives = natives or NativeGateSet()
    topo = topo or Topology(TopologyKind.all_to_all, circuit.num_qubits)
    lowered = decompose_to_native(circuit, natives)
    routed = route_to_topology(lowered, topo)
    final = decompose_to_native(routed.circuit, natives)
    return CompiledCircuit(
        final, routed.qubit_map, _stats_for(final, routed.stats.swap_inserted)
    )
