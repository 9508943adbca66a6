"""HTTP service exposing the sweep runner.

Run with, for example:

    uvicorn rotovac.service:app

Endpoints:
    GET  /health   liveness probe
    POST /v1/run   body: SweepRequest, response: SweepResult
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .errors import (
    ConvergenceError,
    DomainError,
    NumericalInstabilityError,
    RotovacError,
    SolverError,
)
from .sweeps import SweepRequest, SweepResult, run

app = FastAPI(title="rotovac", version=__version__)

# Invalid inputs are the caller's fault (400); solver and convergence
# failures describe a computation that could not be completed (422).
_STATUS_BY_ERROR = {
    DomainError: 400,
    ConvergenceError: 422,
    NumericalInstabilityError: 422,
    SolverError: 422,
}


@app.exception_handler(RotovacError)
async def _rotovac_error_handler(_request: Request, exc: RotovacError) -> JSONResponse:
    status = 422
    for klass, code in _STATUS_BY_ERROR.items():
        if isinstance(exc, klass):
            status = code
            break
    return JSONResponse(
        status_code=status,
        content={"detail": str(exc), "error_type": type(exc).__name__},
    )


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/v1/run", response_model=SweepResult)
def run_sweep(request: SweepRequest) -> SweepResult:
    return run(request)
