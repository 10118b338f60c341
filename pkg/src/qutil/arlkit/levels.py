"""Application readiness levels (ARL 1-5) and their evidence-based assessment.

The ladder is sequential: concept -> proof of concept -> resource
extrapolation showing advantage -> ideal-simulation utility (4a) ->
noisy-simulation utility (4b) -> hardware utility (5). Evidence records may
be gappy (literature is messy); a higher flag without its prerequisites is
reported as an inconsistency and the level is capped at the last unbroken
prefix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class ArlLevel(str, Enum):
    ARL1 = "ARL1"
    ARL2 = "ARL2"
    ARL3 = "ARL3"
    ARL4a = "ARL4a"
    ARL4b = "ARL4b"
    ARL5 = "ARL5"

    @property
    def rank(self) -> int:
        return _LADDER_ORDER.index(self)

    def __lt__(self, other):
        if isinstance(other, ArlLevel):
            return self.rank < other.rank
        return NotImplemented


_LADDER_ORDER = [
    ArlLevel.ARL1,
    ArlLevel.ARL2,
    ArlLevel.ARL3,
    ArlLevel.ARL4a,
    ArlLevel.ARL4b,
    ArlLevel.ARL5,
]


class UnclassifiableEvidenceError(ValueError):
    """No concept flag means there is nothing to classify."""


@dataclass(frozen=True)
class EvidenceRecord:
    has_concept: bool = False
    poc_benefit_vs_scaled_classical: bool = False
    extrapolation_shows_advantage: bool = False
    ideal_sim_utility: bool = False
    noisy_sim_utility: bool = False
    hardware_utility: bool = False
    citations: tuple = ()

    def flags(self) -> list[bool]:
        return [
            self.has_concept,
            self.poc_benefit_vs_scaled_classical,
            self.extrapolation_shows_advantage,
            self.ideal_sim_utility,
            self.noisy_sim_utility,
            self.hardware_utility,
        ]

    def to_dict(self) -> dict:
        return {
            "has_concept": self.has_concept,
            "poc_benefit_vs_scaled_classical": self.poc_benefit_vs_scaled_classical,
            "extrapolation_shows_advantage": self.extrapolation_shows_advantage,
            "ideal_sim_utility": self.ideal_sim_utility,
            "noisy_sim_utility": self.noisy_sim_utility,
            "hardware_utility": self.hardware_utility,
            "citations": list(self.citations),
        }


_FLAG_NAMES = [
    "has_concept",
    "poc_benefit_vs_scaled_classical",
    "extrapolation_shows_advantage",
    "ideal_sim_utility",
    "noisy_sim_utility",
    "hardware_utility",
]


def evidence_inconsistencies(evidence: EvidenceRecord) -> list[str]:
    """Flags set above the first gap in the ladder."""
    flags = evidence.flags()
    try:
        first_gap = flags.index(False)
    except ValueError:
        return []
    return [
        f"{_FLAG_NAMES[i]} is set but {_FLAG_NAMES[first_gap]} is not"
        for i in range(first_gap + 1, len(flags))
        if flags[i]
    ]


def assess_arl(evidence: EvidenceRecord) -> ArlLevel:
    """Highest level whose flag and all prerequisite flags hold."""
    if not evidence.has_concept:
        raise UnclassifiableEvidenceError(
            "cannot classify an application without a stated concept"
        )
    flags = evidence.flags()
    level = _LADDER_ORDER[0]
    for i in range(1, len(flags)):
        if not flags[i]:
            break
        level = _LADDER_ORDER[i]
    return level
