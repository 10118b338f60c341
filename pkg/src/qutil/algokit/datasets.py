"""Labeled datasets: CSV loading and toy generators.

CSV format: header row, a column named "label", remaining columns are
numeric features.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from ..simcore.sampling import make_rng


@dataclass(frozen=True)
class LabeledDataset:
    points: tuple  # ((features tuple, label), ...)

    def __post_init__(self):
        pts = tuple((tuple(float(f) for f in x), int(y)) for x, y in self.points)
        if not pts:
            raise ValueError("dataset is empty")
        dim = len(pts[0][0])
        if any(len(x) != dim for x, _ in pts):
            raise ValueError("non-uniform feature dimension")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def feature_dim(self) -> int:
        return len(self.points[0][0])

    @property
    def labels(self) -> np.ndarray:
        return np.array([y for _, y in self.points])

    @property
    def features(self) -> np.ndarray:
        return np.array([x for x, _ in self.points], dtype=float)

    def num_classes(self) -> int:
        return len(set(self.labels.tolist()))


def load_dataset_csv(path) -> LabeledDataset:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "label" not in reader.fieldnames:
            raise ValueError("CSV needs a header with a 'label' column")
        feature_cols = [c for c in reader.fieldnames if c != "label"]
        points = []
        for row in reader:
            feats = tuple(float(row[c]) for c in feature_cols)
            points.append((feats, int(float(row["label"]))))
    return LabeledDataset(tuple(points))


def antipodal_dataset() -> LabeledDataset:
    """Two 1-feature points at -pi/2 and +pi/2 with labels -1 and +1."""
    return LabeledDataset((((-math.pi / 2,), -1), ((math.pi / 2,), +1)))


def circles_dataset(n: int = 20, radius: float = 0.7, seed: int = 0) -> LabeledDataset:
    """2-feature points in [-1,1]^2; label +1 inside the radius, -1 outside."""
    rng = make_rng(seed)
    points = []
    for _ in range(n):
        x = rng.uniform(-1.0, 1.0, size=2)
        label = 1 if float(np.hypot(*x)) < radius else -1
        points.append((tuple(x), label))
    return LabeledDataset(tuple(points))
