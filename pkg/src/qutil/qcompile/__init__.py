"""Gate-set lowering and topology routing."""

from .natives import NativeGateSet, NonUniversalGateSetError, decompose_to_native
from .topology import Topology, TopologyKind
from .routing import CompiledCircuit, CompileStats, compile_circuit, route_to_topology
from .verify import verify_equivalence

__all__ = [
    "CompileStats",
    "CompiledCircuit",
    "NativeGateSet",
    "NonUniversalGateSetError",
    "Topology",
    "TopologyKind",
    "compile_circuit",
    "decompose_to_native",
    "route_to_topology",
    "verify_equivalence",
]
