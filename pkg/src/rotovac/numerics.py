"""Special-function kernel and brute-force regularization oracles.

The two finite-part extractors in this module (`finite_part_1d` and
`rect_energy_oracle`) evaluate exponentially regulated mode sums on a grid
of cutoff values and fit the divergent powers, returning the cutoff
independent constant.  They are deliberately independent of the closed-form
energies elsewhere in the package so they can serve as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import special

from .errors import ConvergenceError, DomainError, NumericalInstabilityError

__all__ = [
    "ZETA3",
    "BesselOrder",
    "RegulatorGrid",
    "bessel_k",
    "zeta3",
    "finite_part_1d",
    "rect_energy_oracle",
]

# Apery's constant, zeta(3).
ZETA3 = 1.2020569031595942854

_ALLOWED_ORDERS = (0, 1, 2)

# Fits with condition numbers above this are rejected as meaningless.
_COND_LIMIT = 1e12

# e^{-40} ~ 4e-18: dropping terms past this point is below double noise.
_EXP_CUTOFF = 40.0


@dataclass(frozen=True)
class BesselOrder:
    """Order of a modified Bessel function K_n; only n in {0, 1, 2}."""

    order: int

    def __post_init__(self) -> None:
        if self.order not in _ALLOWED_ORDERS:
            raise DomainError(f"Bessel order must be in {_ALLOWED_ORDERS}, got {self.order}")


@dataclass(frozen=True)
class RegulatorGrid:
    """Strictly decreasing grid of cutoff values plus the exponents to fit.

    `values` are the regulator parameters (tau or epsilon, units of length);
    `fit_orders` are the integer powers of the regulator included in the
    least-squares basis.  Order 0 must be present: its coefficient is the
    finite part being extracted.
    """

    values: tuple[float, ...]
    fit_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.size < 4:
            raise DomainError("regulator grid needs at least 4 points")
        if np.any(vals <= 0.0):
            raise DomainError("regulator values must be positive")
        if np.any(np.diff(vals) >= 0.0):
            raise DomainError("regulator values must be strictly decreasing")
        if vals[0] < 4.0 * vals[-1]:
            raise DomainError("regulator grid must span at least a factor of 4")
        if 0 not in self.fit_orders:
            raise DomainError("fit_orders must include 0 (the finite part)")

    @classmethod
    def geometric(
        cls,
        largest: float,
        smallest: float,
        points: int = 12,
        fit_orders: Sequence[int] = (-2, 0, 2, 4),
    ) -> "RegulatorGrid":
        vals = np.geomspace(largest, smallest, points)
        return cls(values=tuple(vals), fit_orders=tuple(fit_orders))


def bessel_k(order: BesselOrder | int, x: float) -> float:
    """Modified Bessel function of the second kind K_n(x), n in {0, 1, 2}.

    Returns 0.0 when the result underflows for very large x.
    """
    n = order.order if isinstance(order, BesselOrder) else BesselOrder(order).order
    if not x > 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    if n == 0:
        return float(special.k0(x))
    if n == 1:
        return float(special.k1(x))
    return float(special.kn(2, x))


def zeta3() -> float:
    """Riemann zeta at 3 (Apery's constant)."""
    return ZETA3


def _fit_finite_part(values: np.ndarray, grid: RegulatorGrid) -> tuple[float, float]:
    """Least-squares fit of regulated sums against powers of the regulator.

    Returns (finite_part, max_relative_residual).  Rows are weighted by the
    regulator raised to the most negative fitted power so that every grid
    point enters with comparable magnitude.
    """
    t = np.asarray(grid.values, dtype=float)
    orders = grid.fit_orders
    weight = t ** float(-min(orders))
    design = np.stack([t ** float(k) for k in orders], axis=1) * weight[:, None]
    rhs = values * weight

    scale = np.linalg.norm(design, axis=0)
    scaled = design / scale
    cond = np.linalg.cond(scaled)
    if cond > _COND_LIMIT:
        raise NumericalInstabilityError(
            f"regulator fit condition number {cond:.3e} exceeds {_COND_LIMIT:.0e}"
        )
    coef, *_ = np.linalg.lstsq(scaled, rhs, rcond=None)
    coef = coef / scale
    resid = np.abs(rhs - design @ coef).max() / np.abs(rhs).max()
    return float(coef[orders.index(0)]), float(resid)


def _default_tau_grid(level_spacing: float) -> RegulatorGrid:
    # tau window scaled by 1/a keeps the extraction exactly scale covariant
    return RegulatorGrid.geometric(0.04 / level_spacing, 0.004 / level_spacing)


def finite_part_1d(level_spacing: float, grid: RegulatorGrid | None = None) -> float:
    """Finite part of S(tau) = sum_{m>=1} (m*a/2) e^{-m*a*tau}.

    The regulated sum is evaluated in its closed geometric form, the
    divergent 1/tau^2 piece (and subleading even powers) are fitted away,
    and the cutoff independent constant -a/24 is returned.
    """
    a = float(level_spacing)
    if not a > 0.0:
        raise DomainError(f"level spacing must be positive, got {a}")
    if grid is None:
        grid = _default_tau_grid(a)
    t = np.asarray(grid.values, dtype=float)
    # sum m e^{-m a tau} = e^{-a tau} / (1 - e^{-a tau})^2
    e = np.exp(-a * t)
    sums = (a / 2.0) * e / (1.0 - e) ** 2
    finite, _ = _fit_finite_part(sums, grid)
    return finite


@dataclass(frozen=True)
class RectangleGeometry:
    """Dirichlet rectangle with sides `height` (L) and `width` (l)."""

    height: float
    width: float

    def __post_init__(self) -> None:
        if not (self.height > 0.0 and self.width > 0.0):
            raise DomainError("rectangle sides must be strictly positive")


def _regulated_rect_sum(L: float, l: float, eps: float, truncation: int) -> float:
    """(pi/2) sum_{m,n>=1} w_nm exp(-eps*pi*w_nm), w_nm = sqrt((n/L)^2+(m/l)^2)."""
    w_max = _EXP_CUTOFF / (np.pi * eps)
    n_max = min(int(w_max * L), truncation)
    if n_max < 1:
        return 0.0
    total = 0.0
    chunk = 2048
    for n0 in range(1, n_max + 1, chunk):
        n = np.arange(n0, min(n0 + chunk, n_max + 1), dtype=float)[:, None] / L
        m_hi = int(np.floor(np.sqrt(max(w_max**2 - (n0 / L) ** 2, 0.0)) * l)) + 1
        m_hi = min(m_hi, truncation)
        m = np.arange(1, m_hi + 1, dtype=float)[None, :] / l
        w = np.sqrt(n * n + m * m)
        w = w[w < w_max]
        total += float(np.sum((np.pi / 2.0) * w * np.exp(-np.pi * eps * w)))
    return total


def _default_eps_grid(L: float, l: float) -> RegulatorGrid:
    scale = min(L, l)
    return RegulatorGrid.geometric(
        0.2 * scale, 0.01 * scale, points=16, fit_orders=(-3, -2, 0, 1, 2, 3)
    )


# Fit residuals above this signal that the divergence basis missed a term
# (for instance a log that a different regularization scheme would produce).
_RECT_RESID_TOL = 1e-6


def rect_energy_oracle(
    geom: RectangleGeometry,
    grid: RegulatorGrid | None = None,
    truncation: int = 2_000_000,
) -> float:
    """Brute-force finite part of the rectangle mode sum.

    Independent ground truth for the closed-form rectangle energy: the
    double frequency sum is regulated by an exponential cutoff, evaluated on
    the grid, and the divergent powers of the cutoff are fitted away.
    """
    if truncation < 1:
        raise DomainError("truncation must be a positive integer")
    L, l = geom.height, geom.width
    if grid is None:
        grid = _default_eps_grid(L, l)
    vals = np.array([_regulated_rect_sum(L, l, e, truncation) for e in grid.values])
    finite, resid = _fit_finite_part(vals, grid)
    if resid > _RECT_RESID_TOL:
        raise NumericalInstabilityError(
            f"rectangle oracle fit residual {resid:.3e} exceeds {_RECT_RESID_TOL:.0e}"
        )
    return finite


def rect_oracle_residual(
    geom: RectangleGeometry,
    grid: RegulatorGrid | None = None,
    truncation: int = 2_000_000,
) -> tuple[float, float]:
    """Like `rect_energy_oracle` but also reports the fit residual."""
    if truncation < 1:
        raise DomainError("truncation must be a positive integer")
    L, l = geom.height, geom.width
    if grid is None:
        grid = _default_eps_grid(L, l)
    vals = np.array([_regulated_rect_sum(L, l, e, truncation) for e in grid.values])
    return _fit_finite_part(vals, grid)
