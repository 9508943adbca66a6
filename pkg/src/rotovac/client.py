"""Thin client for the sweep service.

The CLI talks to the service through this client.  By default the FastAPI
application is driven in-process (no sockets, fully deterministic); pass a
base URL to talk to a remote server instead.
"""

from __future__ import annotations

from typing import Optional

import httpx

from .errors import DomainError, RotovacError, SolverError
from .sweeps import SweepRequest, SweepResult


class ServiceError(RotovacError):
    """The service reported a failure; carries its error type and detail."""

    def __init__(self, error_type: str, detail: str, status_code: int):
        super().__init__(detail)
        self.error_type = error_type
        self.status_code = status_code


class ServiceClient:
    """Sends SweepRequests to a rotovac service, in-process or remote."""

    def __init__(self, base_url: Optional[str] = None):
        if base_url is None:
            import warnings

            with warnings.catch_warnings():
                # the pinned fastapi/httpx pairing warns on import
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client: httpx.Client = TestClient(app)
        else:
            self._client = httpx.Client(base_url=base_url)

    def close(self) -> None:
        self._client.close()

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *_exc) -> None:
        self.close()

    def run(self, request: SweepRequest) -> SweepResult:
        response = self._client.post("/v1/run", json=request.model_dump(mode="json"))
        if response.status_code == 200:
            return SweepResult.model_validate(response.json())
        payload = response.json()
        if response.status_code == 400:
            raise DomainError(payload.get("detail", "invalid request"))
        detail = payload.get("detail", "service error")
        error_type = payload.get("error_type", "SolverError")
        if response.status_code == 422 and "error_type" not in payload:
            # pydantic validation failure on the request body
            raise DomainError(str(detail))
        raise ServiceError(error_type, str(detail), response.status_code)
