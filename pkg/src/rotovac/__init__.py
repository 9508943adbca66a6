"""Vacuum (Casimir) energies of rotating boundary-condition devices.

Core modules:
    numerics   Bessel kernel, zeta(3), brute-force regularization oracles
    circle     rotating cut circle: spectrum, modes, closed-form energies
    rectangle  Dirichlet rectangle energy and its width derivative
    tube       rotating cut tube: energy, optimal frequency, critical height
    device     classical + vacuum total energy and its optimizer
    sweeps     deterministic sweep tables (CSV/JSON wire format)
    service    FastAPI application exposing the sweep runner
    cli        command-line thin client
"""

__version__ = "0.1.0"

from .circle import (
    CircleGeometry,
    ModeLabel,
    RotationState,
    circle_vacuum_moment_of_inertia,
    rotating_energy,
    static_energy,
)
from .device import DeviceMinimum, DeviceSpec, optimal_frequency, total_energy
from .errors import (
    ConvergenceError,
    DomainError,
    NumericalInstabilityError,
    RotovacError,
    SolverError,
    SuperluminalError,
)
from .numerics import (
    RectangleGeometry,
    RegulatorGrid,
    bessel_k,
    finite_part_1d,
    rect_energy_oracle,
    zeta3,
)
from .rectangle import SeriesTolerance, g_function, g_function_derivative, rect_energy, rect_energy_dl
from .tube import (
    MinimumReport,
    TubeGeometry,
    comoving_circumference,
    critical_length,
    omega_min,
    tube_energy,
    tube_energy_longtube,
    vacuum_moment_per_length,
)

__all__ = [
    "__version__",
    "CircleGeometry",
    "RotationState",
    "ModeLabel",
    "RectangleGeometry",
    "TubeGeometry",
    "DeviceSpec",
    "DeviceMinimum",
    "MinimumReport",
    "RegulatorGrid",
    "SeriesTolerance",
    "RotovacError",
    "DomainError",
    "SuperluminalError",
    "ConvergenceError",
    "NumericalInstabilityError",
    "SolverError",
    "bessel_k",
    "zeta3",
    "finite_part_1d",
    "rect_energy_oracle",
    "static_energy",
    "rotating_energy",
    "circle_vacuum_moment_of_inertia",
    "g_function",
    "g_function_derivative",
    "rect_energy",
    "rect_energy_dl",
    "comoving_circumference",
    "tube_energy",
    "tube_energy_longtube",
    "omega_min",
    "critical_length",
    "vacuum_moment_per_length",
    "total_energy",
    "optimal_frequency",
]
