"""Tests for the perturbative corrections of the contact term."""

import math

import numpy as np
import pytest
from scipy.special import gamma

from deltalab.spectral import (
    SpectralProblem,
    pt_first_order,
    pt_second_order_partial,
    solve_shift,
)
from deltalab.specfun import psi0_sq


def first_order_closed_form(n, g, D):
    weight = gamma(n + 0.5 * D) / (gamma(n + 1) * math.pi ** (0.5 * D) * gamma(0.5 * D))
    return 2 * n + 0.5 * D + g * weight


class TestFirstOrder:
    """Test the first-order energies."""

    def test_reference_values(self):
        """Test E_0 in D=3 and E_1 in D=2."""
        assert pt_first_order(0, 1.0, 3) == pytest.approx(1.679587, abs=1e-6)
        assert pt_first_order(1, 1.0, 2) == pytest.approx(3.318310, abs=1e-6)

    def test_closed_form(self):
        """Test against the gamma-function closed form."""
        for n in [0, 1, 4, 10]:
            for D in [1.0, 2.0, 3.0, 4.0]:
                assert pt_first_order(n, 0.7, D) == pytest.approx(
                    first_order_closed_form(n, 0.7, D), rel=1e-13
                )

    def test_agrees_with_secular_solve_for_weak_coupling(self):
        """Test first order matches the exact level as g -> 0 in D=1."""
        g = 1e-4
        exact = solve_shift(SpectralProblem(D=1, coupling=g, K=10000)).energy
        assert exact == pytest.approx(pt_first_order(0, g, 1), abs=1e-6)


class TestSecondOrder:
    """Test the partial second-order sums."""

    def test_sign_for_ground_state(self):
        """Test the ground-state correction is negative."""
        assert pt_second_order_partial(0, 1.0, 3, 50) < 0

    def test_excited_level_excludes_itself(self):
        """Test the n-th term is skipped and K = n is allowed."""
        w = [psi0_sq(k, 3) for k in range(3)]
        expected = w[2] * (w[0] / 4.0 + w[1] / 2.0)
        value = pt_second_order_partial(2, 1.0, 3, 2)
        assert value == pytest.approx(expected, rel=1e-13)

    def test_truncation_below_level(self):
        """Test K < n is rejected."""
        with pytest.raises(ValueError, match="exceeds truncation"):
            pt_second_order_partial(5, 1.0, 3, 4)

    def test_one_dimension_converges(self):
        """Test D=1 partial sums settle down."""
        s4 = pt_second_order_partial(0, 1.0, 1, 10**4)
        s5 = pt_second_order_partial(0, 1.0, 1, 10**5)
        assert abs(s5 - s4) < 1e-2 * abs(s5)

    def test_two_dimensions_grow_logarithmically(self):
        """Test D=2 partial sums grow like ln K with slope -1/(2 pi^2)."""
        K = [10**3, 10**4, 10**5, 10**6]
        sums = [pt_second_order_partial(0, 1.0, 2, k) for k in K]
        slope, _ = np.polyfit(np.log(K), sums, 1)
        assert slope == pytest.approx(-1.0 / (2.0 * math.pi**2), rel=0.1)

    def test_three_dimensions_diverge(self):
        """Test D=3 partial sums grow like sqrt(K)."""
        s2 = pt_second_order_partial(0, 1.0, 3, 10**2)
        s4 = pt_second_order_partial(0, 1.0, 3, 10**4)
        assert abs(s4) > 5.0 * abs(s2)

    def test_quadratic_in_coupling(self):
        """Test the g^2 scaling."""
        base = pt_second_order_partial(0, 1.0, 3, 100)
        assert pt_second_order_partial(0, 3.0, 3, 100) == pytest.approx(9.0 * base)
