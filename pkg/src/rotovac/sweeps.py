"""Sweep requests, deterministic result tables, and CSV/JSON rendering.

This is the wire format shared by the HTTP service and the command-line
client: a `SweepRequest` names a command plus its numeric parameters, and a
`SweepResult` carries an ordered table of rows together with metadata.
Rendering is locale-independent and bit-stable: fixed column order and 12
significant digits, so identical requests produce byte-identical files.
"""

from __future__ import annotations

import math
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from . import __version__
from .circle import CircleGeometry, RotationState, rotating_energy
from .device import DeviceSpec, optimal_frequency
from .errors import DomainError
from .numerics import RectangleGeometry
from .rectangle import rect_energy
from .tube import TubeGeometry, critical_length, omega_min, tube_energy

__all__ = ["Grid", "SweepRequest", "SweepResult", "run", "render", "write_result"]

Command = Literal[
    "circle-energy",
    "rect-energy",
    "tube-sweep",
    "omega-min-curve",
    "critical-length",
    "device-optimize",
]

THREADS_ENV = "ROTOVAC_THREADS"


class Grid(BaseModel):
    """Uniform grid for the swept variable."""

    min: float
    max: float
    steps: int = Field(ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> "Grid":
        if not self.min < self.max:
            raise ValueError("grid min must be strictly less than max")
        return self

    def points(self) -> list[float]:
        span = self.max - self.min
        return [self.min + span * i / (self.steps - 1) for i in range(self.steps)]


class SweepRequest(BaseModel):
    command: Command
    parameters: dict[str, float] = Field(default_factory=dict)
    grid: Optional[Grid] = None
    output_format: Literal["csv", "json"] = "csv"
    output_path: Optional[str] = None


class SweepResult(BaseModel):
    columns: list[str]
    rows: list[list[float]]
    metadata: dict

    @model_validator(mode="after")
    def _finite(self) -> "SweepResult":
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row width does not match column count")
            if not all(math.isfinite(v) for v in row):
                raise ValueError("result rows must contain only finite values")
        return self


def _max_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is not None:
        workers = int(raw)
        if workers < 1:
            raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw}")
        return workers
    return min(8, os.cpu_count() or 1)


def _map_ordered(func: Callable[[float], list[float]], points: list[float]) -> list[list[float]]:
    """Evaluate sweep points concurrently, rows ordered by grid index."""
    workers = _max_workers()
    if workers == 1 or len(points) < 4:
        return [func(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, points))


def _param(request: SweepRequest, name: str, default: float | None = None) -> float:
    if name in request.parameters:
        return float(request.parameters[name])
    if default is None:
        raise DomainError(f"command {request.command!r} requires parameter {name!r}")
    return default


def _run_circle(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    radius = _param(request, "radius", 1.0)
    geom = CircleGeometry(radius=radius)

    def row(omega: float) -> list[float]:
        energy = rotating_energy(geom, RotationState(omega * radius))
        return [omega, energy]

    if request.grid is None:
        points = [_param(request, "omega", 0.0)]
    else:
        points = request.grid.points()
    return ["omega", "energy"], _map_ordered(row, points)


def _run_rect(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    height = _param(request, "height")

    def row(width: float) -> list[float]:
        energy = rect_energy(RectangleGeometry(height=height, width=width))
        return [height, width, energy]

    if request.grid is None:
        points = [_param(request, "width")]
    else:
        points = request.grid.points()
    return ["height", "width", "energy"], _map_ordered(row, points)


def _run_tube_sweep(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    radius = _param(request, "radius", 1.0)
    height = _param(request, "height")
    geom = TubeGeometry(radius=radius, height=height)
    if request.grid is None:
        raise DomainError("tube-sweep requires a grid over omega_R")
    e_static = tube_energy(geom, RotationState(0.0))

    def row(x: float) -> list[float]:
        e = tube_energy(geom, RotationState(x))
        return [x, radius * e, radius * (e - e_static)]

    return ["omega_R", "E_vac_R", "E_rot_R"], _map_ordered(row, request.grid.points())


def _run_omega_min_curve(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    radius = _param(request, "radius", 1.0)
    if request.grid is None:
        raise DomainError("omega-min-curve requires a grid over L_over_R")

    def row(l_over_r: float) -> list[float]:
        report = omega_min(TubeGeometry(radius=radius, height=l_over_r * radius))
        return [l_over_r, report.omega_x]

    return ["L_over_R", "omega_min_R"], _map_ordered(row, request.grid.points())


def _run_critical_length(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    radius = _param(request, "radius", 1.0)
    tol = _param(request, "tol", 1e-3)
    value = critical_length(radius, tol)
    return (
        ["radius", "critical_length", "critical_length_over_R"],
        [[radius, value, value / radius]],
    )


def _run_device_optimize(request: SweepRequest) -> tuple[list[str], list[list[float]]]:
    radius = _param(request, "radius", 1.0)
    inertia = _param(request, "inertia", 0.0)
    if "height" in request.parameters:
        geometry = TubeGeometry(radius=radius, height=_param(request, "height"))
    else:
        geometry = CircleGeometry(radius=radius)
    report = optimal_frequency(DeviceSpec(geometry=geometry, classical_moment=inertia))
    columns = [
        "omega_x",
        "energy_at_min",
        "is_nontrivial",
        "barrier_height",
        "no_interior_minimum",
    ]
    row = [
        report.omega_x,
        report.energy_at_min,
        float(report.is_nontrivial),
        report.barrier_height,
        float(report.no_interior_minimum),
    ]
    return columns, [row]


_RUNNERS = {
    "circle-energy": _run_circle,
    "rect-energy": _run_rect,
    "tube-sweep": _run_tube_sweep,
    "omega-min-curve": _run_omega_min_curve,
    "critical-length": _run_critical_length,
    "device-optimize": _run_device_optimize,
}


def run(request: SweepRequest) -> SweepResult:
    """Execute a sweep request and return its ordered result table."""
    columns, rows = _RUNNERS[request.command](request)
    metadata = {
        "command": request.command,
        "parameters": dict(sorted(request.parameters.items())),
        "grid": request.grid.model_dump() if request.grid is not None else None,
        "version": __version__,
        "rows": len(rows),
    }
    return SweepResult(columns=columns, rows=rows, metadata=metadata)


def _format_cell(value: float) -> str:
    return f"{value:.12g}"


def render(result: SweepResult, output_format: str) -> str:
    """Render a result as deterministic CSV or JSON text."""
    if output_format == "csv":
        lines = [",".join(result.columns)]
        for row in result.rows:
            lines.append(",".join(_format_cell(v) for v in row))
        return "\n".join(lines) + "\n"
    if output_format == "json":
        return result.model_dump_json(indent=2) + "\n"
    raise DomainError(f"unknown output format {output_format!r}")


def write_result(result: SweepResult, output_format: str, path: str) -> None:
    """Atomically write a rendered result (temp file then rename)."""
    text = render(result, output_format)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rotovac-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
