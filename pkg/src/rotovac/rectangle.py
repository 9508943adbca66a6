"""Renormalized Casimir energy of a massless scalar in a Dirichlet rectangle.

The energy of an L x l rectangle is

    E(L, l) = pi/(48 L) - zeta(3) l / (16 pi L^2) + (pi / L) G(l / L)

with G the double Bessel-K1 series below.  Although the expression looks
asymmetric, it is an exact identity that E(L, l) = E(l, L); the
implementation exploits this by always evaluating the series at aspect
ratio >= 1, where it converges within a few terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special

from .errors import ConvergenceError, DomainError
from .numerics import ZETA3, RectangleGeometry

__all__ = [
    "RectangleGeometry",
    "SeriesTolerance",
    "g_function",
    "g_function_derivative",
    "rect_energy",
    "rect_energy_dl",
]

TWO_PI = 2.0 * math.pi

# sum_{d | p} d^2 <= zeta(2) p^2, used in rigorous tail bounds
_ZETA2 = math.pi**2 / 6.0


@dataclass(frozen=True)
class SeriesTolerance:
    """Truncation control for the Bessel series."""

    absolute_tol: float = 1e-13
    max_terms: int = 1_000_000

    def __post_init__(self) -> None:
        if self.absolute_tol < 1e-15:
            raise DomainError("absolute_tol must be >= 1e-15")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")


_DEFAULT_TOL = SeriesTolerance()

# cache of sigma_2(p) = sum of squared divisors, extended on demand
_sigma2: list[int] = [0]


def _sigma2_upto(p: int) -> int:
    global _sigma2
    if p >= len(_sigma2):
        new_len = max(p + 1, 2 * len(_sigma2), 64)
        table = [0] * new_len
        for d in range(1, new_len):
            dd = d * d
            for q in range(d, new_len, d):
                table[q] += dd
        _sigma2 = table
    return _sigma2[p]


def _envelope(y: float, margin: float) -> float:
    """Prefactor of the K_n(y) ~ sqrt(pi/2y) e^{-y} envelope, with margin.

    The exponential is deliberately left out; it is absorbed into the
    geometric tail sums so nothing overflows at large argument.
    """
    return margin * math.sqrt(math.pi / (2.0 * y))


def _tail_p_exp(q: int, alpha: float, power: int) -> float:
    """Upper bound on sum_{p >= q} p^power e^{-alpha p} for power in {1, 2}."""
    r = math.exp(-alpha)
    if power == 1:
        return r**q * (q - (q - 1) * r) / (1.0 - r) ** 2
    head = q * q - (2 * q * q - 2 * q - 1) * r + (q - 1) ** 2 * r * r
    return r**q * head / (1.0 - r) ** 3


def g_function(z: float, tol: SeriesTolerance = _DEFAULT_TOL) -> float:
    """G(z) = -(1/2 pi) sum_{n,m>=1} (n/m) K_1(2 pi n m z).

    Terms are grouped by the product p = n m, giving coefficients
    sigma_2(p)/p; the series is stopped once a rigorous bound on the
    dropped tail falls below `tol.absolute_tol`.
    """
    if not z > 0.0:
        raise DomainError(f"g_function requires z > 0, got {z}")
    alpha = TWO_PI * z
    acc = 0.0
    p = 0
    while True:
        p += 1
        if p > tol.max_terms:
            raise ConvergenceError(
                f"g_function did not converge within {tol.max_terms} terms at z={z}"
            )
        y = alpha * p
        acc += (_sigma2_upto(p) / p) * float(special.k1(y))
        if y >= 1.0:
            # sigma_2(q)/q <= zeta(2) q; K_1 bounded by its envelope
            tail = _ZETA2 * _envelope(y, 1.4) * _tail_p_exp(p + 1, alpha, 1)
            if tail < tol.absolute_tol:
                break
    return -acc / TWO_PI


def g_function_derivative(z: float, tol: SeriesTolerance = _DEFAULT_TOL) -> float:
    """dG/dz = -sum_{n,m>=1} n^2 K_1'(2 pi n m z), K_1' = -(K_0 + K_2)/2."""
    if not z > 0.0:
        raise DomainError(f"g_function_derivative requires z > 0, got {z}")
    alpha = TWO_PI * z
    acc = 0.0
    p = 0
    while True:
        p += 1
        if p > tol.max_terms:
            raise ConvergenceError(
                f"g_function_derivative did not converge within {tol.max_terms} "
                f"terms at z={z}"
            )
        y = alpha * p
        k1prime = -0.5 * (float(special.k0(y)) + float(special.kn(2, y)))
        acc += _sigma2_upto(p) * k1prime
        if y >= 1.0:
            # |K_1'| <= K_2; envelope with margin, sigma_2(q) <= zeta(2) q^2
            tail = _ZETA2 * _envelope(y, 2.6) * _tail_p_exp(p + 1, alpha, 2)
            if tail < tol.absolute_tol:
                break
    return -acc


def rect_energy(geom: RectangleGeometry, tol: SeriesTolerance = _DEFAULT_TOL) -> float:
    """Renormalized Casimir energy of the L x l Dirichlet rectangle."""
    L, l = geom.height, geom.width
    if l < L:
        L, l = l, L
    z = l / L
    return (
        math.pi / (48.0 * L)
        - ZETA3 * l / (16.0 * math.pi * L**2)
        + (math.pi / L) * g_function(z, tol)
    )


def rect_energy_dl(geom: RectangleGeometry, tol: SeriesTolerance = _DEFAULT_TOL) -> float:
    """Analytic derivative of `rect_energy` with respect to the width l."""
    L, l = geom.height, geom.width
    if l >= L:
        return -ZETA3 / (16.0 * math.pi * L**2) + (math.pi / L**2) * g_function_derivative(
            l / L, tol
        )
    # evaluated through the swapped form E(l, L); chain rule on G(L/l)
    z = L / l
    return (
        -math.pi / (48.0 * l**2)
        + ZETA3 * L / (8.0 * math.pi * l**3)
        - (math.pi / l**2) * g_function(z, tol)
        - (math.pi * L / l**3) * g_function_derivative(z, tol)
    )
