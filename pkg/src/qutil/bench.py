"""Harness glue: named application runs and scaling sweeps.

Maps application ids to runnable configurations, executes them with a
resource recorder attached, and packages results as plain dicts ready for
JSON serialization. Wall-clock timing is reported separately under a
"runtime" key so the remaining payload is deterministic per seed.
"""
from __future__ import annotations

import itertools
import math
import os

import numpy as np

from .algokit import (
    ShotConfig,
    TargetDistribution,
    VqeProblem,
    build_hea_ansatz,
    circles_dataset,
    load_dataset_csv,
    quantum_kernel_matrix,
    run_qcbm,
    run_qvc,
    run_reuploading,
    run_varqite,
    run_vqe,
    shots_to_resolve_uniform,
    train_kernel_classifier,
)
from .algokit.hamiltonians import exact_ground_energy, group_pauli_terms, tfim_chain
from .profiler import (
    ResourceRecorder,
    fit_scaling,
    mirror_benchmark,
    profile,
    verify_table_row,
)
from .profiler.tablecheck import IMPLEMENTED_APPS, UnknownAppError
from .qcompile import Topology, TopologyKind, compile_circuit
from .simcore import NoiseModel, make_rng, paulisum_from_text

DEFAULT_SEED = 7


def base_seed(explicit: int | None = None) -> int:
    """Explicit seed, else the QUTIL_SEED environment override, else 7."""
    if explicit is not None:
        return int(explicit)
    return int(os.environ.get("QUTIL_SEED", DEFAULT_SEED))


class ConfigError(ValueError):
    """Bad run configuration (unknown app, missing file, bad parameter)."""


def _require_app(app: str):
    if app not in IMPLEMENTED_APPS:
        raise ConfigError(
            f"unknown app {app!r}; runnable apps: {', '.join(IMPLEMENTED_APPS)}"
        )


def _jsonable(obj):
    """Coerce numpy scalars/containers to plain JSON types."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def _profile_dict(recorder: ResourceRecorder) -> tuple[dict, float]:
    prof = profile(recorder).to_dict()
    wall = prof.pop("wall_runtime_seconds")
    return prof, wall


def _load_hamiltonian(config: dict):
    path = config.get("hamiltonian")
    if path is not None:
        if not os.path.exists(path):
            raise ConfigError(f"hamiltonian file not found: {path}")
        with open(path) as fh:
            return paulisum_from_text(fh.read())
    return tfim_chain(int(config.get("num_qubits", 2)))


def _load_dataset(config: dict):
    path = config.get("dataset")
    if path is not None:
        if not os.path.exists(path):
            raise ConfigError(f"dataset file not found: {path}")
        return load_dataset_csv(path)
    return circles_dataset(
        int(config.get("num_points", 12)), seed=base_seed(config.get("seed"))
    )


def _noise_from_config(config: dict) -> NoiseModel | None:
    p1 = float(config.get("p1", 0.0))
    p2 = float(config.get("p2", 0.0))
    if p1 == 0.0 and p2 == 0.0:
        return None
    return NoiseModel(p1, p2)


def run_app(app: str, config: dict | None = None) -> dict:
    """Run one application once; returns a JSON-ready result dict."""
    _require_app(app)
    config = dict(config or {})
    seed = base_seed(config.get("seed"))
    recorder = ResourceRecorder()

    if app == "vqe":
        h = _load_hamiltonian(config)
        layers = int(config.get("layers", 2))
        ansatz = build_hea_ansatz(h.num_qubits, layers)
        mode = config.get("mode", "exact")
        shot_config = ShotConfig(
            mode="shots" if mode in ("shots", "noisy") else "exact",
            shots=int(config.get("shots", 1024)),
        )
        problem = VqeProblem(h, ansatz, shot_config)
        trace = run_vqe(
            problem,
            optimizer=config.get("optimizer", "coordinate"),
            seed=seed,
            max_sweeps=int(config.get("max_sweeps", 60)),
            recorder=recorder,
        )
        exact = exact_ground_energy(h) if h.num_qubits <= 12 else None
        results = {
            "final_energy": trace.final_objective,
            "exact_energy": exact,
            "abs_error": (
                abs(trace.final_objective - exact) if exact is not None else None
            ),
            "converged": trace.converged,
            "num_groups": trace.extras["num_groups"],
            "energy_evaluations": trace.extras["energy_evaluations"],
        }
        warnings = list(trace.warnings)

    elif app == "varqite":
        h = _load_hamiltonian(config)
        layers = int(config.get("layers", 1))
        ansatz = build_hea_ansatz(h.num_qubits, layers)
        trace = run_varqite(
            h,
            ansatz,
            dt=float(config.get("dt", 0.1)),
            steps=int(config.get("steps", 50)),
            seed=seed,
            recorder=recorder,
        )
        exact = exact_ground_energy(h) if h.num_qubits <= 12 else None
        results = {
            "final_energy": trace.final_objective,
            "exact_energy": exact,
            "converged": trace.converged,
            "circuit_evaluations": trace.extras["circuit_evaluations"],
            "final_dt": trace.extras["final_dt"],
        }
        warnings = list(trace.warnings)

    elif app == "qk":
        data = _load_dataset(config)
        kernel = quantum_kernel_matrix(
            data,
            mode=config.get("mode", "exact"),
            shots=int(config.get("shots", 4096)),
            seed=seed,
            recorder=recorder,
        )
        clf = train_kernel_classifier(
            kernel, data.labels, ridge=float(config.get("ridge", 1e-3))
        )
        results = {
            "training_accuracy": clf.training_accuracy,
            "kernel_min_eigenvalue": float(np.linalg.eigvalsh(kernel)[0]),
            "num_points": len(data),
        }
        warnings = []

    elif app == "qvc":
        data = _load_dataset(config)
        trace = run_qvc(
            data,
            layers=int(config.get("layers", 1)),
            epochs=int(config.get("epochs", 30)),
            noise=_noise_from_config(config),
            shots=int(config.get("shots", 256)),
            seed=seed,
            recorder=recorder,
        )
        results = {
            "accuracy": trace.extras["accuracy"],
            "final_loss": trace.final_objective,
            "num_points": len(data),
        }
        warnings = list(trace.warnings)

    elif app == "reuploading":
        data = _load_dataset(config)
        trace = run_reuploading(
            data,
            layers=int(config.get("layers", 2)),
            sweeps=int(config.get("sweeps", 30)),
            seed=seed,
            recorder=recorder,
        )
        results = {
            "accuracy": trace.extras["accuracy"],
            "final_cost": trace.final_objective,
            "circuit_depth": trace.extras["circuit_depth"],
        }
        warnings = list(trace.warnings)

    elif app == "qcbm":
        n = int(config.get("num_qubits", 3))
        target_spec = config.get("target", "uniform")
        if target_spec == "uniform":
            target = TargetDistribution.uniform(n)
        elif target_spec.startswith("point:"):
            target = TargetDistribution.point_mass(n, target_spec.split(":", 1)[1])
        else:
            raise ConfigError(f"unknown target {target_spec!r}")
        shots = config.get("shots", 2048)
        trace = run_qcbm(
            target,
            layers=int(config.get("layers", 2)),
            iterations=int(config.get("iterations", 80)),
            shots=int(shots) if shots is not None else None,
            seed=seed,
            recorder=recorder,
        )
        results = {"final_tvd": trace.extras["final_tvd"], "num_qubits": n}
        warnings = list(trace.warnings)

    prof, wall = _profile_dict(recorder)
    return {
        "app": app,
        "seed": seed,
        "results": _jsonable(results),
        "profile": _jsonable(prof),
        "warnings": list(warnings),
        "runtime": {"wall_seconds": wall},
    }


# Per-app sweep: the variable actually varied and the columns measured at
# each size. Columns not driven by that variable are left unmeasured.
SWEEP_VARIABLES = {
    "vqe": "N",
    "varqite": "p",
    "qk": "|T|",
    "qvc": "|T|",
    "reuploading": "L",
    "qcbm": "N",
}

_DEFAULT_SIZES = {
    "vqe": [4, 6, 8, 10, 12],
    "varqite": [8, 24, 40, 56],
    "qk": [4, 6, 8, 10],
    "qvc": [4, 6, 8, 10],
    "reuploading": [1, 2, 3, 4],
    "qcbm": [2, 3, 4, 5],
}


def default_sweep_sizes(app: str) -> list[int]:
    _require_app(app)
    return list(_DEFAULT_SIZES[app])


def _sweep_point(app: str, size: int, seed: int) -> dict:
    """Measured columns at one sweep size: {column: value}."""
    if app == "vqe":
        h = tfim_chain(size)
        ansatz = build_hea_ansatz(size, 1)
        compiled = compile_circuit(
            ansatz, topo=Topology(TopologyKind.linear, size)
        )
        return {
            "circuits": len(group_pauli_terms(h)),
            "depth": compiled.stats.native_depth,
            "shots": 1024,
        }
    if app == "varqite":
        # Hamiltonian with `size` terms on a fixed 3-qubit register
        words = [
            "".join(w)
            for w in itertools.product("IXYZ", repeat=3)
            if set(w) != {"I"}
        ]
        if size > len(words):
            raise ConfigError(f"at most {len(words)} Hamiltonian terms")
        h = paulisum_from_text(
            "\n".join(f"-1.0 {w}" for w in words[:size])
        )
        ansatz = build_hea_ansatz(3, 1)
        recorder = ResourceRecorder()
        run_varqite(h, ansatz, dt=0.1, steps=3, seed=seed, recorder=recorder)
        return {"circuits": profile(recorder).circuits_executed}
    if app == "qk":
        data = circles_dataset(size, seed=seed)
        recorder = ResourceRecorder()
        quantum_kernel_matrix(data, recorder=recorder)
        return {"circuits": profile(recorder).circuits_executed}
    if app == "qvc":
        data = circles_dataset(size, seed=seed)
        recorder = ResourceRecorder()
        run_qvc(data, layers=1, epochs=1, seed=seed, recorder=recorder)
        prof = profile(recorder)
        # circuits per loss evaluation: one readout per training point
        return {"circuits": prof.circuits_executed / max(1, len(recorder.events))}
    if app == "reuploading":
        data = circles_dataset(6, seed=seed)
        recorder = ResourceRecorder()
        trace = run_reuploading(data, layers=size, sweeps=2, seed=seed, recorder=recorder)
        return {"depth": trace.extras["circuit_depth"]}
    if app == "qcbm":
        return {
            "circuits": 1,
            "depth": build_hea_ansatz(size, 2).depth(),
            "shots": shots_to_resolve_uniform(size, tolerance=0.06, seed=seed, repeats=20),
        }
    raise AssertionError(app)


def sweep_app(app: str, sizes=None, seed: int | None = None) -> dict:
    """Measure resource columns across sizes, fit scaling classes, and
    compare against the published row."""
    _require_app(app)
    sizes = sorted(set(int(s) for s in (sizes or default_sweep_sizes(app))))
    if len(sizes) < 4:
        raise ConfigError("sweep needs at least 4 distinct sizes")
    seed = base_seed(seed)

    samples: dict[str, list] = {}
    for size in sizes:
        point = _sweep_point(app, size, seed)
        for column, value in point.items():
            samples.setdefault(column, []).append((size, value))

    variable = SWEEP_VARIABLES[app]
    fits = {
        column: fit_scaling(points, variable)
        for column, points in samples.items()
        if all(v > 0 for _, v in points)
    }
    report = verify_table_row(app, fits)
    return {
        "app": app,
        "variable": variable,
        "sizes": sizes,
        "seed": seed,
        "fits": {column: fit.to_dict() for column, fit in fits.items()},
        "row_report": report.to_dict(),
    }


def run_mirror_suite(
    sizes=None,
    layers: int = 1,
    p1: float = 0.0,
    p2: float = 0.0,
    shots: int = 1000,
    seed: int | None = None,
) -> dict:
    """Mirror-circuit fidelity benchmark over an ansatz family."""
    sizes = sorted(set(int(s) for s in (sizes or [2, 3, 4, 5, 6])))
    seed = base_seed(seed)
    family = {}
    for n in sizes:
        ansatz = build_hea_ansatz(n, layers)
        params = make_rng(seed + n).uniform(-math.pi, math.pi, ansatz.num_params)
        family[n] = ansatz.bind(params)
    noise = NoiseModel(p1, p2)
    results = mirror_benchmark(family, noise, shots=shots, seed=seed)
    return {
        "seed": seed,
        "noise": {"p1": p1, "p2": p2},
        "shots": shots,
        "results": [
            {
                "size": r.size,
                "depth": r.depth,
                "success_probability": r.success_probability,
            }
            for r in results
        ],
    }
