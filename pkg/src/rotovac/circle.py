"""Massless scalar on a circle of radius R with a rotating Dirichlet cut.

All energies are in natural units (hbar = c = 1), so an energy carries
dimension 1/length and the moment of inertia carries dimension length.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, SuperluminalError

__all__ = [
    "CircleGeometry",
    "RotationState",
    "ModeLabel",
    "static_energy",
    "mode_frequency",
    "effective_eigenenergy",
    "mode_function",
    "eigenvalue",
    "rotating_energy",
    "circle_vacuum_moment_of_inertia",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircleGeometry:
    """Cut circle of radius `radius` (length units)."""

    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise DomainError(f"radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class RotationState:
    """Dimensionless signed edge speed x = Omega * R, |x| < 1.

    Negative and positive values are clockwise and counterclockwise
    rotation respectively.
    """

    x: float

    def __post_init__(self) -> None:
        if not abs(self.x) < 1.0:
            raise SuperluminalError(f"|Omega * R| must be < 1, got {self.x}")


@dataclass(frozen=True)
class ModeLabel:
    """Angular quantum number m >= 1 and continuous frequency label omega."""

    m: int
    omega: float = 0.0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"angular quantum number must be >= 1, got {self.m}")


def static_energy(geom: CircleGeometry) -> float:
    """Vacuum energy -1/(48 R) of the non-rotating cut circle."""
    return -1.0 / (48.0 * geom.radius)


def mode_frequency(m: int, geom: CircleGeometry) -> float:
    """Static energy level omega_m = m / (2 R)."""
    if m < 1:
        raise DomainError(f"mode number must be >= 1, got {m}")
    return m / (2.0 * geom.radius)


def effective_eigenenergy(m: int, geom: CircleGeometry, rot: RotationState) -> float:
    """Rotation-modified level m (1 - x^2) / (2 R)."""
    if m < 1:
        raise DomainError(f"mode number must be >= 1, got {m}")
    return m * (1.0 - rot.x**2) / (2.0 * geom.radius)


def _mod_2pi(value: float) -> float:
    """Reduce to [0, 2*pi); the cut sits at 0, approached via one-sided limits."""
    return value % TWO_PI


def phase_coefficient(geom: CircleGeometry, rot: RotationState) -> float:
    """Coefficient beta = Omega R^2 / (1 - Omega^2 R^2) of the mode phase.

    This is the unique coefficient for which the mixed derivatives of the
    d'Alembertian cancel and the mode satisfies its eigenvalue equation.
    """
    omega_rot = rot.x / geom.radius
    return omega_rot * geom.radius**2 / (1.0 - rot.x**2)


def mode_function(
    label: ModeLabel,
    geom: CircleGeometry,
    rot: RotationState,
    t: float,
    phi: float,
) -> complex:
    """Laboratory-frame mode of the rotating cut circle.

    (1/sqrt(pi R)) sin(m u / 2) exp(-i omega (t - beta u)) with
    u = [phi - Omega t] reduced modulo 2*pi.  Vanishes at the cut from
    both sides for every integer m.
    """
    R = geom.radius
    omega_rot = rot.x / R
    u = _mod_2pi(phi - omega_rot * t)
    beta = phase_coefficient(geom, rot)
    amplitude = math.sin(0.5 * label.m * u) / math.sqrt(math.pi * R)
    return amplitude * cmath.exp(-1j * label.omega * (t - beta * u))


def eigenvalue(label: ModeLabel, geom: CircleGeometry, rot: RotationState) -> float:
    """d'Alembertian eigenvalue m^2 (1 - x^2) / (4 R^2) - omega^2 / (1 - x^2)."""
    R = geom.radius
    x2 = rot.x**2
    return label.m**2 * (1.0 - x2) / (4.0 * R**2) - label.omega**2 / (1.0 - x2)


def rotating_energy(geom: CircleGeometry, rot: RotationState) -> float:
    """Vacuum energy -(1 + x^2) / (48 R) of the rotating cut circle."""
    return -(1.0 + rot.x**2) / (48.0 * geom.radius)


def circle_vacuum_moment_of_inertia(geom: CircleGeometry) -> float:
    """Second Omega-derivative of the rotating energy at Omega = 0: -R/24."""
    return -geom.radius / 24.0
