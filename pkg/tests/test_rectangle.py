"""Dirichlet rectangle energy, its series kernel, and the width derivative."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotovac.errors import ConvergenceError, DomainError
from rotovac.numerics import ZETA3, RectangleGeometry, rect_energy_oracle
from rotovac.rectangle import (
    SeriesTolerance,
    g_function,
    g_function_derivative,
    rect_energy,
    rect_energy_dl,
)
from ._oracles import central_first_difference


class TestSeriesTolerance:
    def test_defaults(self):
        tol = SeriesTolerance()
        assert tol.absolute_tol == 1e-13
        assert tol.max_terms == 1_000_000

    def test_rejects_tolerance_below_floor(self):
        with pytest.raises(DomainError):
            SeriesTolerance(absolute_tol=1e-16)

    def test_rejects_nonpositive_max_terms(self):
        with pytest.raises(DomainError):
            SeriesTolerance(max_terms=0)


class TestGFunction:
    def test_value_at_one_frozen(self):
        assert g_function(1.0) == pytest.approx(-1.57591199216e-4, rel=1e-9)

    def test_first_term_dominates_at_z_one(self):
        k1 = 9.869960576810455e-4  # K_1(2 pi) frozen from quadrature
        approx_z1 = -k1 / (2.0 * math.pi)
        total = g_function(1.0)
        assert abs(total - approx_z1) / abs(total) < 0.02

    def test_negligible_at_z_ten(self):
        assert abs(g_function(10.0)) < 1e-15

    @given(st.floats(min_value=0.3, max_value=5.0))
    @settings(max_examples=40, deadline=None)
    def test_negative_and_increasing(self, z):
        v = g_function(z)
        assert v < 0.0
        assert g_function(z * 1.2) > v

    def test_rejects_nonpositive_argument(self):
        with pytest.raises(DomainError):
            g_function(0.0)

    def test_convergence_error_when_budget_exhausted(self):
        with pytest.raises(ConvergenceError):
            g_function(1e-4, SeriesTolerance(absolute_tol=1e-13, max_terms=100))


class TestGFunctionDerivative:
    def test_value_at_one_frozen(self):
        assert g_function_derivative(1.0) == pytest.approx(1.0803003298e-3, rel=1e-8)

    @pytest.mark.parametrize("z", [0.5, 1.0, 2.0])
    def test_matches_finite_difference(self, z):
        fd = central_first_difference(g_function, z, 1e-5)
        assert g_function_derivative(z) == pytest.approx(fd, rel=1e-6)

    def test_positive_on_working_range(self):
        for z in (0.4, 0.8, 1.5, 3.0):
            assert g_function_derivative(z) > 0.0

    def test_rejects_nonpositive_argument(self):
        with pytest.raises(DomainError):
            g_function_derivative(-1.0)

    def test_convergence_error_when_budget_exhausted(self):
        with pytest.raises(ConvergenceError):
            g_function_derivative(1e-4, SeriesTolerance(absolute_tol=1e-13, max_terms=100))


class TestRectEnergy:
    def test_unit_square_frozen(self):
        assert rect_energy(RectangleGeometry(height=1.0, width=1.0)) == pytest.approx(
            0.04104059734, rel=1e-9
        )

    def test_long_strip_frozen(self):
        assert rect_energy(RectangleGeometry(height=1.0, width=10.0)) == pytest.approx(
            -0.17369177557, rel=1e-9
        )

    def test_long_strip_linear_slope(self):
        # for l >> L the energy is dominated by -zeta(3) l / (16 pi L^2)
        e = rect_energy(RectangleGeometry(height=1.0, width=50.0))
        linear = math.pi / 48.0 - ZETA3 * 50.0 / (16.0 * math.pi)
        assert e == pytest.approx(linear, rel=1e-10)

    @pytest.mark.parametrize("ratio", [1.0, 1.5, 2.0, 5.0, 10.0, 20.0])
    def test_exactly_symmetric_under_swap(self, ratio):
        a = rect_energy(RectangleGeometry(height=1.0, width=ratio))
        b = rect_energy(RectangleGeometry(height=ratio, width=1.0))
        assert a == b

    @pytest.mark.parametrize("scale", [0.5, 2.0, 10.0])
    def test_inverse_length_scaling(self, scale):
        base = rect_energy(RectangleGeometry(height=1.0, width=3.0))
        scaled = rect_energy(RectangleGeometry(height=scale, width=3.0 * scale))
        assert scaled == pytest.approx(base / scale, rel=1e-12)

    @pytest.mark.parametrize("sides", [(1.0, 1.0), (1.0, 2.0), (1.0, 5.0)])
    def test_matches_brute_force_oracle(self, sides):
        geom = RectangleGeometry(height=sides[0], width=sides[1])
        assert rect_energy(geom) == pytest.approx(rect_energy_oracle(geom), rel=1e-3)

    def test_square_energy_is_positive(self):
        assert rect_energy(RectangleGeometry(height=1.0, width=1.0)) > 0.0

    def test_wide_rectangle_energy_is_negative(self):
        assert rect_energy(RectangleGeometry(height=1.0, width=3.0)) < 0.0


class TestRectEnergyDerivative:
    def test_long_strip_slope_frozen(self):
        value = rect_energy_dl(RectangleGeometry(height=1.0, width=10.0))
        assert value == pytest.approx(-0.023914162252, rel=1e-9)
        # indistinguishable from the asymptotic slope -zeta(3)/(16 pi)
        assert value == pytest.approx(-ZETA3 / (16.0 * math.pi), rel=1e-6)

    @pytest.mark.parametrize("sides", [(1.0, 3.0), (1.0, 7.0), (2.0, 9.0), (5.0, 2.0)])
    def test_matches_finite_difference(self, sides):
        L, l = sides

        def energy_of_width(w):
            return rect_energy(RectangleGeometry(height=L, width=w))

        fd = central_first_difference(energy_of_width, l, 1e-5)
        assert rect_energy_dl(RectangleGeometry(height=L, width=l)) == pytest.approx(
            fd, rel=1e-6
        )

    def test_negative_for_wide_rectangles(self):
        for l in (3.0, 5.0, 20.0):
            assert rect_energy_dl(RectangleGeometry(height=1.0, width=l)) < 0.0

    def test_swapped_branch_continuity(self):
        # the derivative is evaluated through two different formulas on
        # either side of l = L; they must agree across the seam
        below = rect_energy_dl(RectangleGeometry(height=1.0, width=0.999999))
        above = rect_energy_dl(RectangleGeometry(height=1.0, width=1.000001))
        assert below == pytest.approx(above, rel=1e-4)
