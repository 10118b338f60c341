"""Request/response models for the harness service API."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class ScoreRequest(BaseModel):
    performance: float = Field(gt=0)
    runtime_seconds: float = Field(gt=0)
    power_watts: float = Field(gt=0)
    volume_liters: Optional[float] = Field(default=None, gt=0)


class ScoreResponse(BaseModel):
    score_per_joule: float
    score_per_joule_liter: Optional[float] = None


class DeviceSpecModel(BaseModel):
    name: str
    power_watts: float = Field(gt=0)
    volume_liters: float = Field(gt=0)
    weight_kg: float = Field(gt=0)
    cost_currency_units: float = Field(ge=0)
    qubit_count: Optional[int] = None
    topology: Optional[str] = None


class RunOutcomeModel(BaseModel):
    performance: float = Field(gt=0)
    runtime_seconds: float = Field(gt=0)
    accuracy_error: float = Field(ge=0)
    device: DeviceSpecModel
    metric: str = "mirror_success_per_second"


class VerdictRequest(BaseModel):
    candidate: RunOutcomeModel
    baseline: RunOutcomeModel
    similarity_factor: float = Field(default=2.0, ge=1.0)


class VerdictResponse(BaseModel):
    comparable: bool
    criteria: dict
    verdict: str
    inputs: dict
    markdown: str


class CompileRequest(BaseModel):
    circuit: dict
    topology: str = "all_to_all"
    num_physical: Optional[int] = None
    one_qubit: Optional[list[str]] = None
    two_qubit: Optional[list[str]] = None
    verify: bool = True


class CompileResponse(BaseModel):
    circuit: dict
    qubit_map: list[int]
    stats: dict
    equivalent: Optional[bool] = None


class BenchRequest(BaseModel):
    app: str
    config: dict = Field(default_factory=dict)


class BenchResponse(BaseModel):
    app: str
    seed: int
    results: dict
    profile: dict
    warnings: list[str]
    runtime: dict


class SweepRequest(BaseModel):
    app: str
    sizes: Optional[list[int]] = None
    seed: Optional[int] = None


class SweepResponse(BaseModel):
    app: str
    variable: str
    sizes: list[int]
    seed: int
    fits: dict
    row_report: dict


class MirrorRequest(BaseModel):
    sizes: Optional[list[int]] = None
    layers: int = Field(default=1, ge=1)
    p1: float = Field(default=0.0, ge=0.0, le=1.0)
    p2: float = Field(default=0.0, ge=0.0, le=1.0)
    shots: int = Field(default=1000, ge=1)
    seed: Optional[int] = None


class MirrorResponse(BaseModel):
    seed: int
    noise: dict
    shots: int
    results: list[dict]


class SurveyResponse(BaseModel):
    rows: list[dict]
    provenance: str
    markdown: str
    csv: str


class ReportRequest(BaseModel):
    measured: Optional[dict] = None  # app_id -> row report dict


class ReportResponse(BaseModel):
    markdown: str
    document: dict


ALL_MODELS = [
    HealthResponse,
    ScoreRequest,
    ScoreResponse,
    DeviceSpecModel,
    RunOutcomeModel,
    VerdictRequest,
    VerdictResponse,
    CompileRequest,
    CompileResponse,
    BenchRequest,
    BenchResponse,
    SweepRequest,
    SweepResponse,
    MirrorRequest,
    MirrorResponse,
    SurveyResponse,
    ReportRequest,
    ReportResponse,
]


def schema_document() -> dict:
    """Machine-readable schema of every request/response model."""
    return {model.__name__: model.model_json_schema() for model in ALL_MODELS}
