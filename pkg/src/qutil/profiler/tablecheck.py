"""Measured-vs-published scaling comparison for the implemented algorithms.

Each implemented application carries, per scalability column, the published
asymptotic class under the sweep variable the harness actually varies.
Measured classes are reported verbatim; a mismatch is flagged, never
overwritten.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .scaling import ScalingClass, ScalingFit

MATCH = "MATCH"
MISMATCH = "MISMATCH"
NOT_MEASURED = "NOT-MEASURED"

# app -> column -> (published expression, sweep variable, expected class)
PUBLISHED_SCALING = {
    "vqe": {
        "circuits": ("O(N)", "N", ScalingClass.linear),
        "depth": ("O(N)", "N", ScalingClass.linear),
        "shots": ("O(1)", "N", ScalingClass.constant),
    },
    "varqite": {
        "circuits": ("O(t*q*(q+p))", "p", ScalingClass.linear),
        "depth": ("O(q)", "q", ScalingClass.linear),
        "shots": ("O(1)", "N", ScalingClass.constant),
    },
    "qk": {
        "circuits": ("O(binom(|T|,2))", "|T|", ScalingClass.poly_2),
        "depth": ("O(N)", "N", ScalingClass.linear),
        "shots": ("O(2^N)", "N", ScalingClass.exponential),
    },
    "qvc": {
        "circuits": ("O(|T|)", "|T|", ScalingClass.linear),
        "depth": ("O(N)", "N", ScalingClass.linear),
        "shots": ("O(1)", "N", ScalingClass.constant),
    },
    "reuploading": {
        "circuits": ("O(|T|)", "|T|", ScalingClass.linear),
        "depth": ("O(L)", "L", ScalingClass.linear),
        "shots": ("O(1)", "L", ScalingClass.constant),
    },
    "qcbm": {
        "circuits": ("O(1)", "N", ScalingClass.constant),
        "depth": ("O(N)", "N", ScalingClass.linear),
        "shots": ("O(2^N)", "N", ScalingClass.exponential),
    },
}

IMPLEMENTED_APPS = tuple(PUBLISHED_SCALING)


class UnknownAppError(ValueError):
    pass


@dataclass(frozen=True)
class RowReport:
    app: str
    cells: dict  # column -> cell dict

    def to_dict(self) -> dict:
        return {"app": self.app, "cells": self.cells}

    def to_markdown(self) -> str:
        lines = [
            f"### {self.app}",
            "",
            "| column | published | measured | status |",
            "|---|---|---|---|",
        ]
        for col, cell in self.cells.items():
            lines.append(
                f"| {col} | {cell['published']} | "
                f"{cell['measured_class'] or '-'} | {cell['status']} |"
            )
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["app", "column", "published", "measured_class", "status"])
        for col, cell in self.cells.items():
            writer.writerow(
                [self.app, col, cell["published"], cell["measured_class"], cell["status"]]
            )
        return buf.getvalue()


def verify_table_row(app: str, measured_fits: dict[str, ScalingFit]) -> RowReport:
    """Compare measured scaling classes against the published row.

    measured_fits maps column name -> ScalingFit; absent columns come back
    as NOT-MEASURED.
    """
    if app not in PUBLISHED_SCALING:
        raise UnknownAppError(
            f"unknown app {app!r}; implemented: {', '.join(IMPLEMENTED_APPS)}"
        )
    cells = {}
    for col, (expr, var, expected) in PUBLISHED_SCALING[app].items():
        fit = measured_fits.get(col)
        if fit is None:
            cells[col] = {
                "published": expr,
                "variable": var,
                "expected_class": expected.value,
                "measured_class": None,
                "status": NOT_MEASURED,
            }
            continue
        status = MATCH if fit.best_class == expected else MISMATCH
        cells[col] = {
            "published": expr,
            "variable": var,
            "expected_class": expected.value,
            "measured_class": fit.best_class.value,
            "status": status,
            "samples": [[float(a), float(b)] for a, b in fit.samples],
        }
    return RowReport(app=app, cells=cells)
