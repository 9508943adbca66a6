"""Total energy of a device: classical rotation plus vacuum contribution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .circle import CircleGeometry, RotationState, rotating_energy
from .errors import DomainError
from .tube import MinimumReport, TubeGeometry, minimize_over_x, tube_energy

__all__ = [
    "DeviceSpec",
    "DeviceMinimum",
    "classical_energy",
    "total_energy",
    "optimal_frequency",
]

Geometry = Union[CircleGeometry, TubeGeometry]


@dataclass(frozen=True)
class DeviceSpec:
    """A rotating device: its boundary geometry and classical moment of inertia.

    `classical_moment` is in natural units (hbar = c = 1), where an inertia
    reduces to a length.
    """

    geometry: Geometry
    classical_moment: float = 0.0

    def __post_init__(self) -> None:
        if self.classical_moment < 0.0:
            raise DomainError("classical moment of inertia must be non-negative")


@dataclass(frozen=True)
class DeviceMinimum(MinimumReport):
    """Minimum report extended with a flag for boundary-seeking energies.

    A cut circle with small inertia has no interior minimum: its energy
    decreases monotonically toward the superluminal edge, which is reported
    explicitly instead of returning the scan ceiling.
    """

    no_interior_minimum: bool = False


def classical_energy(spec: DeviceSpec, rot: RotationState) -> float:
    """Rigid-body kinetic energy I Omega^2 / 2 with Omega = x / R."""
    omega = rot.x / spec.geometry.radius
    return 0.5 * spec.classical_moment * omega**2


def _vacuum_energy(spec: DeviceSpec, rot: RotationState) -> float:
    if isinstance(spec.geometry, TubeGeometry):
        return tube_energy(spec.geometry, rot)
    return rotating_energy(spec.geometry, rot)


def total_energy(spec: DeviceSpec, rot: RotationState) -> float:
    """Classical rotational energy plus the geometry's vacuum energy."""
    return classical_energy(spec, rot) + _vacuum_energy(spec, rot)


def optimal_frequency(spec: DeviceSpec) -> DeviceMinimum:
    """Preferred edge speed of the device, from a scan of the total energy.

    Scan-plus-refine over x = Omega R, identical to the bare tube optimizer;
    with zero inertia and a tube geometry it reproduces that result.  When
    the energy keeps decreasing up to the scan ceiling (circle with inertia
    below R/24), the absence of an interior minimum is flagged.
    """
    report = minimize_over_x(lambda x: total_energy(spec, RotationState(x)))

    # A minimizer glued to the scan ceiling means the energy is still
    # decreasing at the edge of the domain, not a genuine minimum.
    eps = 1e-6
    if report.is_nontrivial and report.omega_x >= 0.999 - eps:
        e_edge = total_energy(spec, RotationState(report.omega_x))
        e_back = total_energy(spec, RotationState(report.omega_x - eps))
        if e_edge < e_back:
            e0 = total_energy(spec, RotationState(0.0))
            return DeviceMinimum(
                omega_x=0.0,
                energy_at_min=e0,
                is_nontrivial=False,
                barrier_height=0.0,
                no_interior_minimum=True,
            )
    return DeviceMinimum(
        omega_x=report.omega_x,
        energy_at_min=report.energy_at_min,
        is_nontrivial=report.is_nontrivial,
        barrier_height=report.barrier_height,
    )
