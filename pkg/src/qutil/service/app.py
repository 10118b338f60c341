"""HTTP service exposing the harness: scoring, verdicts, compilation,
benchmark runs, scaling sweeps, and the built-in survey."""
from __future__ import annotations

import json

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..arlkit import builtin_survey, render_csv, render_json, render_markdown
from ..bench import ConfigError, run_app, run_mirror_suite, sweep_app
from ..profiler.tablecheck import RowReport, UnknownAppError
from ..qcompile import NativeGateSet, Topology, TopologyKind, compile_circuit
from ..qcompile.verify import VerifyTooLargeError, verify_equivalence
from ..simcore import circuit_from_json, circuit_to_json
from ..swapc import (
    DeviceSpec,
    RunOutcome,
    score1,
    score2,
    utility_verdict,
)
from . import models

app = FastAPI(title="qutil harness", version=__version__)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health", response_model=models.HealthResponse)
def health() -> models.HealthResponse:
    return models.HealthResponse(status="ok", version=__version__)


@app.post("/score", response_model=models.ScoreResponse)
def score(req: models.ScoreRequest) -> models.ScoreResponse:
    s1 = score1(req.performance, req.runtime_seconds, req.power_watts)
    s2 = None
    if req.volume_liters is not None:
        s2 = score2(
            req.performance, req.volume_liters, req.runtime_seconds, req.power_watts
        )
    return models.ScoreResponse(score_per_joule=s1, score_per_joule_liter=s2)


def _outcome(m: models.RunOutcomeModel) -> RunOutcome:
    return RunOutcome(
        performance=m.performance,
        runtime_seconds=m.runtime_seconds,
        accuracy_error=m.accuracy_error,
        metric=m.metric,
        device=DeviceSpec(
            name=m.device.name,
            power_watts=m.device.power_watts,
            volume_liters=m.device.volume_liters,
            weight_kg=m.device.weight_kg,
            cost_currency_units=m.device.cost_currency_units,
            qubit_count=m.device.qubit_count,
            topology=m.device.topology,
        ),
    )


@app.post("/verdict", response_model=models.VerdictResponse)
def verdict(req: models.VerdictRequest) -> models.VerdictResponse:
    try:
        result = utility_verdict(
            _outcome(req.candidate), _outcome(req.baseline), req.similarity_factor
        )
    except ValueError as exc:
        raise _bad_request(exc)
    return models.VerdictResponse(
        comparable=result.comparable,
        criteria=result.criteria,
        verdict=result.verdict.value,
        inputs=result.inputs,
        markdown=result.to_markdown(),
    )


@app.post("/compile", response_model=models.CompileResponse)
def compile_endpoint(req: models.CompileRequest) -> models.CompileResponse:
    try:
        circuit = circuit_from_json(json.dumps(req.circuit))
        native_kwargs = {}
        if req.one_qubit:
            native_kwargs["one_qubit"] = frozenset(req.one_qubit)
        if req.two_qubit:
            native_kwargs["two_qubit"] = frozenset(req.two_qubit)
        natives = NativeGateSet(**native_kwargs)
        topo = Topology(
            TopologyKind(req.topology),
            req.num_physical or circuit.num_qubits,
        )
        compiled = compile_circuit(circuit, natives, topo)
    except (ValueError, KeyError) as exc:
        raise _bad_request(exc)
    equivalent = None
    if req.verify:
        try:
            equivalent = verify_equivalence(
                circuit, compiled.circuit, compiled.qubit_map
            )
        except VerifyTooLargeError:
            equivalent = None
    return models.CompileResponse(
        circuit=json.loads(circuit_to_json(compiled.circuit)),
        qubit_map=list(compiled.qubit_map),
        stats=compiled.stats.to_dict(),
        equivalent=equivalent,
    )


@app.post("/bench/run", response_model=models.BenchResponse)
def bench_run(req: models.BenchRequest) -> models.BenchResponse:
    try:
        result = run_app(req.app, req.config)
    except (ConfigError, UnknownAppError, ValueError) as exc:
        raise _bad_request(exc)
    return models.BenchResponse(**result)


@app.post("/sweep", response_model=models.SweepResponse)
def sweep(req: models.SweepRequest) -> models.SweepResponse:
    try:
        result = sweep_app(req.app, req.sizes, req.seed)
    except (ConfigError, UnknownAppError, ValueError) as exc:
        raise _bad_request(exc)
    return models.SweepResponse(**result)


@app.post("/mirror", response_model=models.MirrorResponse)
def mirror(req: models.MirrorRequest) -> models.MirrorResponse:
    try:
        result = run_mirror_suite(
            sizes=req.sizes,
            layers=req.layers,
            p1=req.p1,
            p2=req.p2,
            shots=req.shots,
            seed=req.seed,
        )
    except ValueError as exc:
        raise _bad_request(exc)
    return models.MirrorResponse(**result)


@app.get("/survey", response_model=models.SurveyResponse)
def survey() -> models.SurveyResponse:
    rows = builtin_survey()
    return models.SurveyResponse(
        rows=[r.to_dict() for r in rows],
        provenance=json.loads(render_json(rows))["provenance"],
        markdown=render_markdown(rows),
        csv=render_csv(rows),
    )


@app.post("/report", response_model=models.ReportResponse)
def report(req: models.ReportRequest) -> models.ReportResponse:
    rows = builtin_survey()
    measured = None
    if req.measured:
        measured = {
            app_id: RowReport(app=d["app"], cells=d["cells"])
            for app_id, d in req.measured.items()
        }
    return models.ReportResponse(
        markdown=render_markdown(rows, measured),
        document=json.loads(render_json(rows, measured)),
    )
