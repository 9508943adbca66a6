"""HTTP service endpoints and error mapping."""

import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DeprecationWarning)
    from fastapi.testclient import TestClient

from rotovac import __version__
from rotovac.client import ServiceClient, ServiceError
from rotovac.errors import DomainError
from rotovac.service import app
from rotovac.sweeps import Grid, SweepRequest


@pytest.fixture()
def http():
    with TestClient(app) as client:
        yield client


class TestEndpoints:
    def test_health(self, http):
        response = http.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["version"] == __version__

    def test_run_circle_energy(self, http):
        response = http.post(
            "/v1/run",
            json={"command": "circle-energy", "parameters": {"radius": 1.0, "omega": 0.5}},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["columns"] == ["omega", "energy"]
        assert body["rows"][0][1] == pytest.approx(-1.25 / 48.0)

    def test_run_tube_sweep(self, http):
        response = http.post(
            "/v1/run",
            json={
                "command": "tube-sweep",
                "parameters": {"radius": 1.0, "height": 50.0},
                "grid": {"min": 0.0, "max": 0.9, "steps": 8},
            },
        )
        assert response.status_code == 200
        assert len(response.json()["rows"]) == 8

    def test_domain_error_maps_to_400(self, http):
        response = http.post(
            "/v1/run",
            json={"command": "circle-energy", "parameters": {"radius": -1.0}},
        )
        assert response.status_code == 400
        body = response.json()
        assert body["error_type"] == "DomainError"
        assert "radius" in body["detail"]

    def test_superluminal_maps_to_400(self, http):
        response = http.post(
            "/v1/run",
            json={"command": "circle-energy", "parameters": {"radius": 1.0, "omega": 2.0}},
        )
        assert response.status_code == 400
        assert response.json()["error_type"] == "SuperluminalError"

    def test_malformed_body_maps_to_422(self, http):
        response = http.post("/v1/run", json={"command": "no-such-command"})
        assert response.status_code == 422


class TestClientWrapper:
    def test_in_process_round_trip(self):
        request = SweepRequest(
            command="circle-energy",
            parameters={"radius": 1.0},
            grid=Grid(min=0.0, max=0.9, steps=5),
        )
        with ServiceClient() as client:
            result = client.run(request)
        assert len(result.rows) == 5
        assert result.rows[0][1] == pytest.approx(-1.0 / 48.0)

    def test_domain_errors_surface_as_exceptions(self):
        request = SweepRequest(command="rect-energy", parameters={"height": 1.0})
        with ServiceClient() as client:
            with pytest.raises(DomainError):
                client.run(request)

    def test_service_error_carries_type(self):
        assert issubclass(ServiceError, Exception)
        err = ServiceError("SolverError", "no bracket", 422)
        assert err.error_type == "SolverError"
        assert err.status_code == 422
