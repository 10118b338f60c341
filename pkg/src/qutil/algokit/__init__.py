"""Runnable desk-scale implementations of the surveyed algorithms."""

from .hamiltonians import (
    dense_matrix,
    exact_ground_energy,
    group_pauli_terms,
    tfim_chain,
)
from .ansatz import build_hea_ansatz
from .trace import TrainingTrace
from .optimizers import parameter_shift_gradient, rotosolve_step, spsa_minimize
from .datasets import LabeledDataset, circles_dataset, load_dataset_csv
from .vqe import ShotConfig, VqeProblem, run_vqe
from .varqite import run_varqite, varqite_circuit_count
from .kernels import (
    KernelClassifier,
    angle_encoder,
    layered_encoder,
    quantum_kernel_matrix,
    train_kernel_classifier,
)
from .qvc import run_qvc
from .reuploading import build_reuploading_circuit, run_reuploading
from .qcbm import TargetDistribution, run_qcbm, shots_to_resolve_uniform, tvd

__all__ = [
    "KernelClassifier",
    "LabeledDataset",
    "ShotConfig",
    "TargetDistribution",
    "TrainingTrace",
    "VqeProblem",
    "angle_encoder",
    "build_hea_ansatz",
    "build_reuploading_circuit",
    "circles_dataset",
    "dense_matrix",
    "exact_ground_energy",
    "group_pauli_terms",
    "layered_encoder",
    "load_dataset_csv",
    "parameter_shift_gradient",
    "quantum_kernel_matrix",
    "rotosolve_step",
    "run_qcbm",
    "run_qvc",
    "run_reuploading",
    "run_varqite",
    "run_vqe",
    "shots_to_resolve_uniform",
    "spsa_minimize",
    "tfim_chain",
    "train_kernel_classifier",
    "tvd",
    "varqite_circuit_count",
]
