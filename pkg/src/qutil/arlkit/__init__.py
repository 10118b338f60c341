from .exprs import VARIABLE_LEGEND, ExprParseError, ScalingExpr
from .levels import (
    ArlLevel,
    EvidenceRecord,
    UnclassifiableEvidenceError,
    assess_arl,
    evidence_inconsistencies,
)
from .report import render_csv, render_json, render_markdown
from .survey import (
    ArlAssessment,
    Compilability,
    Connectivity,
    ExtendedLabels,
    Parallelizability,
    Robustness,
    builtin_survey,
)

__all__ = [
    "VARIABLE_LEGEND",
    "ExprParseError",
    "ScalingExpr",
    "ArlLevel",
    "EvidenceRecord",
    "UnclassifiableEvidenceError",
    "assess_arl",
    "evidence_inconsistencies",
    "render_csv",
    "render_json",
    "render_markdown",
    "ArlAssessment",
    "Compilability",
    "Connectivity",
    "ExtendedLabels",
    "Parallelizability",
    "Robustness",
    "builtin_survey",
]
