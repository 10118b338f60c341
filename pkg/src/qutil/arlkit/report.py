"""Survey report rendering: Markdown, CSV, and JSON views.

When measured scaling fits are supplied (from the profiler), the published
and measured classes are shown side by side with MATCH/MISMATCH flags.
"""
from __future__ import annotations

import csv
import io
import json

from .survey import ArlAssessment

_COLUMNS = [
    "app",
    "level",
    "circuits",
    "depth",
    "shots",
    "compilability",
    "connectivity",
    "robustness",
    "parallelizability",
]

_FOOTER = (
    "Readiness rules encode the published milestone prose only; "
    "the roadmap figures are not machine-readable and are not modeled."
)


def _row_values(a: ArlAssessment) -> list[str]:
    lab = a.labels
    return [
        a.name,
        a.level.value,
        str(lab.circuits),
        str(lab.depth),
        str(lab.shots),
        lab.compilability.value,
        lab.connectivity.value,
        lab.robustness.value,
        lab.parallelizability.value,
    ]


def render_markdown(
    assessments: list[ArlAssessment],
    measured: dict | None = None,
) -> str:
    """measured maps app_id -> profiler RowReport."""
    lines = ["# Application readiness survey", ""]
    lines.append("| " + " | ".join(_COLUMNS) + " |")
    lines.append("|" + "---|" * len(_COLUMNS))
    for a in assessments:
        lines.append("| " + " | ".join(_row_values(a)) + " |")
    if measured:
        lines.append("")
        lines.append("## Measured scaling vs published")
        lines.append("")
        for a in assessments:
            row = measured.get(a.app_id)
            if row is not None:
                lines.append(row.to_markdown())
    lines.append("")
    lines.append(f"_{_FOOTER}_")
    return "\n".join(lines) + "\n"


def render_csv(assessments: list[ArlAssessment]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_COLUMNS)
    for a in assessments:
        writer.writerow(_row_values(a))
    return buf.getvalue()


def render_json(
    assessments: list[ArlAssessment],
    measured: dict | None = None,
) -> str:
    doc = {
        "rows": [a.to_dict() for a in assessments],
        "provenance": _FOOTER,
    }
    if measured:
        doc["measured"] = {
            app_id: row.to_dict() for app_id, row in sorted(measured.items())
        }
    return json.dumps(doc, sort_keys=True, indent=2)
