"""Built-in readiness survey of eleven quantum applications.

Each row carries a readiness level plus the extended classification labels:
scaling expressions for measurement circuits, gate depth, and shots per
circuit, together with compilability, connectivity, robustness, and
parallelizability labels. The dataset is a frozen reference; the profiler
can check a subset of its scaling claims against measured sweeps.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exprs import ScalingExpr
from .levels import (
    ArlLevel,
    EvidenceRecord,
    assess_arl,
    evidence_inconsistencies,
)


class Compilability(str, Enum):
    native = "native"
    non_native_1q2q = "non_native_1q2q"
    multi_qubit = "multi_qubit"
    classical_control = "classical_control"


class Connectivity(str, Enum):
    linear = "linear"
    circular = "circular"
    nearest_neighbor = "nearest_neighbor"
    all_to_all = "all_to_all"


class Robustness(str, Enum):
    noise_resource = "noise_resource"
    variational = "variational"
    non_variational = "non_variational"


class Parallelizability(str, Enum):
    qubit_based = "qubit_based"
    circuit_based = "circuit_based"
    shot_based = "shot_based"


@dataclass(frozen=True)
class ExtendedLabels:
    circuits: ScalingExpr
    depth: ScalingExpr
    shots: ScalingExpr
    compilability: Compilability
    connectivity: Connectivity
    robustness: Robustness
    parallelizability: Parallelizability

    def to_dict(self) -> dict:
        return {
            "circuits": str(self.circuits),
            "depth": str(self.depth),
            "shots": str(self.shots),
            "compilability": self.compilability.value,
            "connectivity": self.connectivity.value,
            "robustness": self.robustness.value,
            "parallelizability": self.parallelizability.value,
        }


@dataclass(frozen=True)
class ArlAssessment:
    app_id: str
    name: str
    level: ArlLevel
    labels: ExtendedLabels
    evidence: EvidenceRecord
    category: str

    def __post_init__(self):
        if assess_arl(self.evidence) != self.level:
            raise ValueError(
                f"{self.app_id}: level {self.level.value} inconsistent with evidence"
            )

    @property
    def inconsistencies(self) -> list[str]:
        return evidence_inconsistencies(self.evidence)

    def to_dict(self) -> dict:
        return {
            "app_id": self.app_id,
            "name": self.name,
            "category": self.category,
            "level": self.level.value,
            "labels": self.labels.to_dict(),
            "evidence": self.evidence.to_dict(),
            "inconsistencies": self.inconsistencies,
        }


def _labels(circuits, depth, shots, comp, conn, rob, par) -> ExtendedLabels:
    return ExtendedLabels(
        circuits=ScalingExpr.parse(circuits),
        depth=ScalingExpr.parse(depth),
        shots=ScalingExpr.parse(shots),
        compilability=Compilability(comp),
        connectivity=Connectivity(conn),
        robustness=Robustness(rob),
        parallelizability=Parallelizability(par),
    )


_ARL2_EVIDENCE = EvidenceRecord(
    has_concept=True, poc_benefit_vs_scaled_classical=True
)
_ARL3_EVIDENCE = EvidenceRecord(
    has_concept=True,
    poc_benefit_vs_scaled_classical=True,
    extrapolation_shows_advantage=True,
)

_SURVEY_ROWS = (
    (
        "vqe",
        "VQE",
        "Quantum chemistry and quantum simulation",
        _ARL3_EVIDENCE,
        ArlLevel.ARL3,
        ("O(N)", "O(N)", "O(1)", "native", "linear", "variational", "circuit_based"),
    ),
    (
        "qrbm",
        "QRBM",
        "Quantum chemistry and quantum simulation",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(1)",
            "O(n*m)",
            "O(binom(n,n_p))",
            "classical_control",
            "all_to_all",
            "variational",
            "shot_based",
        ),
    ),
    (
        "varqite",
        "VarQiTE",
        "Quantum chemistry and quantum simulation",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(t*q*(q+p))",
            "O(q)",
            "O(1)",
            "non_native_1q2q",
            "all_to_all",
            "variational",
            "circuit_based",
        ),
    ),
    (
        "qk",
        "QK",
        "Binary and multi-class classification",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(binom(|T|,2))",
            "O(N)",
            "O(2^N)",
            "non_native_1q2q",
            "linear",
            "non_variational",
            "circuit_based",
        ),
    ),
    (
        "qvc",
        "QVC",
        "Binary and multi-class classification",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(|T|)",
            "O(N)",
            "O(1)",
            "non_native_1q2q",
            "linear",
            "variational",
            "circuit_based",
        ),
    ),
    (
        "reuploading",
        "Re-Uploading",
        "Binary and multi-class classification",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(|T|)",
            "O(L)",
            "O(1)",
            "non_native_1q2q",
            "circular",
            "variational",
            "circuit_based",
        ),
    ),
    (
        "qcbm",
        "QCBM",
        "Generative modeling",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        ("O(1)", "O(N)", "O(2^N)", "native", "linear", "variational", "shot_based"),
    ),
    (
        "qnbm",
        "QNBM",
        "Generative modeling",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(1)",
            "O(E)",
            "O(2^n_out)",
            "classical_control",
            "all_to_all",
            "variational",
            "shot_based",
        ),
    ),
    (
        "qcnn",
        "QCNN",
        "Quantum neural networks",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(|T|)",
            "O(N*ceil(log(N,1/r)))",
            "O(1)",
            "classical_control",
            "all_to_all",
            "variational",
            "circuit_based",
        ),
    ),
    (
        "qgnn",
        "QGNN",
        "Quantum neural networks",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(|T|)",
            "O(p)",
            "O(1)",
            "non_native_1q2q",
            "all_to_all",
            "variational",
            "circuit_based",
        ),
    ),
    (
        "nisq_tda",
        "NISQ-TDA",
        "Data analysis",
        _ARL2_EVIDENCE,
        ArlLevel.ARL2,
        (
            "O(n_v)",
            "O(V)",
            "O(2^V)",
            "classical_control",
            "all_to_all",
            "non_variational",
            "circuit_based",
        ),
    ),
)


def builtin_survey() -> list[ArlAssessment]:
    """The frozen eleven-row survey dataset."""
    return [
        ArlAssessment(
            app_id=app_id,
            name=name,
            category=category,
            level=level,
            labels=_labels(*labels),
            evidence=evidence,
        )
        for app_id, name, category, evidence, level, labels in _SURVEY_ROWS
    ]
