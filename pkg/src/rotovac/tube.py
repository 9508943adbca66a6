"""Vacuum energy of the rotating cut tube and its frequency optimizers.

The tube of radius R and height L reduces to a Dirichlet rectangle of
sides L and l0(R, Omega) = 2 pi R / sqrt(1 - Omega^2 R^2):

    E(Omega) = (l0 / pi R) [E_rect(L, l0) - Omega^2 R^2 l0 dE_rect/dl(L, l0)]

All internal scans work in the dimensionless edge speed x = Omega R, which
makes the scale invariance E(sR, sL, x) = E(R, L, x)/s exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .circle import RotationState
from .errors import DomainError, SolverError
from .numerics import ZETA3, RectangleGeometry
from .rectangle import SeriesTolerance, rect_energy, rect_energy_dl

__all__ = [
    "TubeGeometry",
    "MinimumReport",
    "comoving_circumference",
    "tube_energy",
    "tube_energy_longtube",
    "omega_min",
    "critical_length",
    "vacuum_moment_per_length",
]

# scan ceiling and density for the global-minimum search in x = Omega R
_X_MAX = 0.999
_SCAN_POINTS = 2000
_GOLDEN_TOL = 1e-8
_ENERGY_MARGIN = 1e-12

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class TubeGeometry:
    """Cut tube of radius `radius` and height `height` (length units)."""

    radius: float
    height: float

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise DomainError(f"radius must be positive, got {self.radius}")
        if not self.height > 0.0:
            raise DomainError(f"height must be positive, got {self.height}")


@dataclass(frozen=True)
class MinimumReport:
    """Outcome of a frequency scan: minimizer, value, and barrier height."""

    omega_x: float
    energy_at_min: float
    is_nontrivial: bool
    barrier_height: float = 0.0


def comoving_circumference(geom: TubeGeometry, rot: RotationState) -> float:
    """Effective circumference l0 = 2 pi R / sqrt(1 - x^2) of the spinning tube."""
    return 2.0 * math.pi * geom.radius / math.sqrt(1.0 - rot.x**2)


def tube_energy(
    geom: TubeGeometry,
    rot: RotationState,
    tol: SeriesTolerance | None = None,
) -> float:
    """Vacuum energy of the rotating cut tube."""
    tol = tol if tol is not None else SeriesTolerance()
    R, L = geom.radius, geom.height
    x2 = rot.x**2
    l0 = comoving_circumference(geom, rot)
    rect = RectangleGeometry(height=L, width=l0)
    energy = rect_energy(rect, tol)
    if x2 != 0.0:
        energy -= x2 * l0 * rect_energy_dl(rect, tol)
    return (l0 / (math.pi * R)) * energy


def tube_energy_longtube(geom: TubeGeometry, rot: RotationState) -> float:
    """Leading large-L/R form of the rotational vacuum energy.

    zeta(3) L / (32 pi^3 R^2) * [1 - sqrt(1 - x^2) (1 + 2 x^2)]; vanishes at
    x = 0 and is minimized at x = 1/sqrt(2).
    """
    x2 = rot.x**2
    bracket = 1.0 - math.sqrt(1.0 - x2) * (1.0 + 2.0 * x2)
    return ZETA3 * geom.height / (32.0 * math.pi**3 * geom.radius**2) * bracket


def _golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Minimize a unimodal function on [a, b] to interval width `tol`."""
    m1 = b - _INV_GOLDEN * (b - a)
    m2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = f(m1), f(m2)
    while (b - a) > tol:
        if f1 < f2:
            b, m2, f2 = m2, m1, f1
            m1 = b - _INV_GOLDEN * (b - a)
            f1 = f(m1)
        else:
            a, m1, f1 = m1, m2, f2
            m2 = a + _INV_GOLDEN * (b - a)
            f2 = f(m2)
    return 0.5 * (a + b)


def minimize_over_x(
    energy: Callable[[float], float],
    x_max: float = _X_MAX,
    scan_points: int = _SCAN_POINTS,
) -> MinimumReport:
    """Dense scan over x in [0, x_max] followed by golden-section refinement.

    Every local minimum candidate on the grid is refined; the report carries
    the global minimizer compared against the x = 0 value.
    """
    xs = np.linspace(0.0, x_max, scan_points)
    es = np.array([energy(float(x)) for x in xs])
    e0 = es[0]

    best_x, best_e = 0.0, float(e0)
    interior = np.nonzero((es[1:-1] <= es[:-2]) & (es[1:-1] <= es[2:]))[0] + 1
    candidates = list(interior)
    if es[-1] < es[-2]:
        candidates.append(len(xs) - 1)
    for i in candidates:
        lo = xs[max(i - 1, 0)]
        hi = xs[min(i + 1, len(xs) - 1)]
        x_ref = _golden_section(energy, float(lo), float(hi), _GOLDEN_TOL)
        e_ref = energy(x_ref)
        if e_ref < best_e:
            best_x, best_e = x_ref, float(e_ref)

    nontrivial = best_e < e0 - _ENERGY_MARGIN
    if not nontrivial:
        return MinimumReport(omega_x=0.0, energy_at_min=float(e0), is_nontrivial=False)

    inside = xs <= best_x
    barrier = float(max(np.max(es[inside]) - e0, 0.0)) if np.any(inside) else 0.0
    return MinimumReport(
        omega_x=best_x,
        energy_at_min=best_e,
        is_nontrivial=True,
        barrier_height=barrier,
    )


def omega_min(geom: TubeGeometry) -> MinimumReport:
    """Global minimizer of the tube vacuum energy over x = Omega R in [0, 0.999)."""
    return minimize_over_x(lambda x: tube_energy(geom, RotationState(x)))


def critical_length(geom_radius: float, tol: float = 1e-3) -> float:
    """Smallest height L at which the energy minimum moves away from Omega = 0.

    Located by bisection on L between R and 1e4 R; `tol` is the relative
    tolerance on the returned length.
    """
    if not geom_radius > 0.0:
        raise DomainError(f"radius must be positive, got {geom_radius}")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    def nontrivial(L: float) -> bool:
        return omega_min(TubeGeometry(radius=geom_radius, height=L)).is_nontrivial

    lo, hi = geom_radius, 1e4 * geom_radius
    if nontrivial(lo) or not nontrivial(hi):
        raise SolverError("critical length is not bracketed in [R, 1e4 R]")
    while (hi - lo) > tol * hi:
        mid = 0.5 * (lo + hi)
        if nontrivial(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def vacuum_moment_per_length(geom: TubeGeometry, step: float = 1e-3) -> float:
    """Vacuum moment of inertia per unit height, d^2 E/dOmega^2 at 0 over L.

    Richardson-refined central second difference in x = Omega R; as L/R grows
    the value tends to the radius-independent constant -3 zeta(3)/(32 pi^3).
    """
    if not step > 0.0:
        raise DomainError(f"step must be positive, got {step}")
    R, L = geom.radius, geom.height

    def e(x: float) -> float:
        return tube_energy(geom, RotationState(x))

    e0 = e(0.0)

    def second_diff(h: float) -> float:
        if h <= 0.0 or 1.0 - h <= h:
            raise DomainError("finite-difference step underflowed the domain")
        return (e(h) - 2.0 * e0 + e(-h)) / h**2

    d_h = second_diff(step)
    d_h2 = second_diff(step / 2.0)
    d2e_dx2 = (4.0 * d_h2 - d_h) / 3.0
    return R**2 * d2e_dx2 / L
