"""Command-line front end; a thin client over the sweep service.

All commands accept lengths in units of the radius unless --radius is
given explicitly.  Sweeps are written as deterministic CSV or JSON; single
point evaluations print the bare value.
"""

from __future__ import annotations

import sys
from typing import Optional

import click

from .client import ServiceClient
from .errors import DomainError, RotovacError
from .sweeps import Grid, SweepRequest, render, write_result

EXIT_FAILURE = 3


def _execute(
    command: str,
    parameters: dict[str, float],
    grid: Optional[Grid],
    output_format: str,
    output_path: Optional[str],
    server: Optional[str],
    single_value: bool = False,
) -> None:
    request = SweepRequest(
        command=command,
        parameters=parameters,
        grid=grid,
        output_format=output_format,
        output_path=output_path,
    )
    try:
        with ServiceClient(server) as client:
            result = client.run(request)
    except RotovacError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILURE)
    if output_path is not None:
        write_result(result, output_format, output_path)
        return
    if single_value and len(result.rows) == 1:
        click.echo(f"{result.rows[0][-1]:.12g}")
        return
    click.echo(render(result, output_format), nl=False)


def _grid_from(omega_min: float, omega_max: float, steps: Optional[int]) -> Optional[Grid]:
    if steps is None:
        return None
    return Grid(min=omega_min, max=omega_max, steps=steps)


server_option = click.option(
    "--server", default=None, help="Base URL of a remote rotovac service (default: in-process)."
)
format_option = click.option(
    "--format", "output_format", type=click.Choice(["csv", "json"]), default="csv"
)
output_option = click.option(
    "--output", "output_path", default=None, help="Write the result to this file atomically."
)


@click.group()
def main() -> None:
    """Vacuum energies of rotating cut-circle and cut-tube devices."""


@main.command("circle-energy")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--omega", type=float, default=0.0, help="Angular frequency (1/length).")
@click.option("--omega-min", type=float, default=0.0)
@click.option("--omega-max", type=float, default=0.9)
@click.option("--steps", type=int, default=None, help="Sweep omega instead of a single point.")
@format_option
@output_option
@server_option
def circle_energy(radius, omega, omega_min, omega_max, steps, output_format, output_path, server):
    """Vacuum energy of the rotating cut circle."""
    grid = _grid_from(omega_min, omega_max, steps)
    _execute(
        "circle-energy",
        {"radius": radius, "omega": omega},
        grid,
        output_format,
        output_path,
        server,
        single_value=grid is None,
    )


@main.command("rect-energy")
@click.option("--height", type=float, required=True)
@click.option("--width", type=float, default=None)
@click.option("--width-min", type=float, default=None)
@click.option("--width-max", type=float, default=None)
@click.option("--steps", type=int, default=None, help="Sweep width instead of a single point.")
@format_option
@output_option
@server_option
def rect_energy_cmd(height, width, width_min, width_max, steps, output_format, output_path, server):
    """Renormalized Casimir energy of a Dirichlet rectangle."""
    if steps is None:
        if width is None:
            raise click.UsageError("provide --width, or --width-min/--width-max/--steps")
        grid = None
        params = {"height": height, "width": width}
    else:
        if width_min is None or width_max is None:
            raise click.UsageError("sweep needs --width-min and --width-max")
        grid = Grid(min=width_min, max=width_max, steps=steps)
        params = {"height": height}
    _execute(
        "rect-energy", params, grid, output_format, output_path, server, single_value=grid is None
    )


@main.command("tube-sweep")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--height", type=float, required=True)
@click.option("--omega-min", type=float, default=0.0, show_default=True)
@click.option("--omega-max", type=float, default=0.95, show_default=True)
@click.option("--steps", type=int, default=96, show_default=True)
@format_option
@output_option
@server_option
def tube_sweep(radius, height, omega_min, omega_max, steps, output_format, output_path, server):
    """Sweep the tube vacuum energy over the edge speed omega_R = Omega * R."""
    grid = Grid(min=omega_min, max=omega_max, steps=steps)
    _execute(
        "tube-sweep",
        {"radius": radius, "height": height},
        grid,
        output_format,
        output_path,
        server,
    )


@main.command("omega-min-curve")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--l-min", type=float, required=True, help="Smallest height, in units of R.")
@click.option("--l-max", type=float, required=True, help="Largest height, in units of R.")
@click.option("--steps", type=int, default=32, show_default=True)
@format_option
@output_option
@server_option
def omega_min_curve(radius, l_min, l_max, steps, output_format, output_path, server):
    """Optimal edge speed of the tube versus its height."""
    grid = Grid(min=l_min, max=l_max, steps=steps)
    _execute("omega-min-curve", {"radius": radius}, grid, output_format, output_path, server)


@main.command("critical-length")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--tol", type=float, default=1e-3, show_default=True)
@format_option
@output_option
@server_option
def critical_length_cmd(radius, tol, output_format, output_path, server):
    """Height above which the tube prefers to rotate; prints L_c / R."""
    _execute(
        "critical-length",
        {"radius": radius, "tol": tol},
        None,
        output_format,
        output_path,
        server,
        single_value=True,
    )


@main.command("device-optimize")
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--height", type=float, default=None, help="Tube height; omit for a circle.")
@click.option("--inertia", type=float, default=0.0, show_default=True)
@format_option
@output_option
@server_option
def device_optimize(radius, height, inertia, output_format, output_path, server):
    """Preferred rotation frequency of a device with classical inertia."""
    params = {"radius": radius, "inertia": inertia}
    if height is not None:
        params["height"] = height
    _execute("device-optimize", params, None, output_format, output_path, server)


if __name__ == "__main__":
    main()
