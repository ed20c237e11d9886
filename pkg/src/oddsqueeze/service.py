"""HTTP service exposing the verification suites.

The core checks are pure functions, so the service is a thin wrapper: a
POST to /verify runs a suite synchronously and returns the full report
document. The CLI is a client of this app (in process by default, over
the network against a deployed instance with --server).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from ._version import __version__
from .report import FORMATS, MODES, SUITES, SuiteConfig, document_to_dict
from .suites import run_suite


class VerifyRequest(BaseModel):
    """Body of POST /verify; mirrors the CLI options."""

    model_config = ConfigDict(extra="forbid")

    suite: str
    p_max: int = Field(default=10, ge=0)
    n_max: int | None = Field(default=None, ge=0)
    mode: str = "both"
    tol: float | None = Field(default=None, gt=0)
    dim: int | None = Field(default=None, ge=2)
    xi: float | None = Field(default=None, ge=0)
    phi: float | None = None


class RecordModel(BaseModel):
    check_id: str
    params: dict[str, int | float | str]
    lhs_decimal: str
    rhs_decimal: str
    lhs_rational: str | None
    rhs_rational: str | None
    abs_err: float | None
    rel_err: float | None
    exact: bool
    pass_: bool = Field(alias="pass")
    tol: float | None
    note: str

    model_config = ConfigDict(populate_by_name=True)


class SummaryModel(BaseModel):
    passed: int
    failed: int
    skipped: int


class ReportModel(BaseModel):
    tool: str
    version: str
    config: dict
    records: list[RecordModel]
    summary: SummaryModel
    duration_seconds: float


class HealthModel(BaseModel):
    status: str
    version: str


class SuitesModel(BaseModel):
    suites: list[str]
    modes: list[str]
    formats: list[str]


app = FastAPI(
    title="oddsqueeze",
    version=__version__,
    description="Verification suites for the completeness of squeezed odd number states.",
)


@app.get("/health", response_model=HealthModel)
def health() -> HealthModel:
    return HealthModel(status="ok", version=__version__)


@app.get("/suites", response_model=SuitesModel)
def suites() -> SuitesModel:
    return SuitesModel(suites=list(SUITES), modes=list(MODES), formats=list(FORMATS))


@app.post("/verify", response_model=ReportModel, response_model_by_alias=True)
def verify(request: VerifyRequest) -> dict:
    try:
        config = SuiteConfig(
            suite=request.suite,
            p_max=request.p_max,
            n_max=request.n_max,
            mode=request.mode,
            tol=request.tol,
            dim=request.dim,
            xi=request.xi,
            phi=request.phi,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return document_to_dict(run_suite(config))
