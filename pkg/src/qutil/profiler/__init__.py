"""Resource profiling, scaling fits, and the mirror fidelity benchmark."""

from .recorder import (
    IncompleteProfileError,
    ResourceProfile,
    ResourceRecorder,
    merge_profiles,
    profile,
)
from .scaling import ScalingClass, ScalingFit, fit_scaling
from .mirror import MirrorResult, mirror_benchmark
from .tablecheck import RowReport, verify_table_row

__all__ = [
    "IncompleteProfileError",
    "MirrorResult",
    "ResourceProfile",
    "ResourceRecorder",
    "RowReport",
    "ScalingClass",
    "ScalingFit",
    "fit_scaling",
    "merge_profiles",
    "mirror_benchmark",
    "profile",
    "verify_table_row",
]
