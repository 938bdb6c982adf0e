"""Tests for the Gaussian-regularized contact Hamiltonian."""

import numpy as np
import pytest
from oracles import gaussian_ground_1d_extrapolated
from pydantic import ValidationError

from deltalab.regularized import (
    RegularizedProblem,
    contact_matrix,
    contact_overlaps,
    delta_eps_matrix,
    double_limit_study,
    eigen_lowest,
    unperturbed_levels,
)
from deltalab.spectral import SpectralProblem, solve_shift
from deltalab.specfun import psi0_sq_values


def ground_energy(D, g, eps, K):
    problem = RegularizedProblem(D=D, g=g, epsilon=eps, K=K)
    return eigen_lowest(delta_eps_matrix(problem))[0]


class TestMatrices:
    """Test matrix construction."""

    def test_unperturbed_levels(self):
        """Test diag(2k + D/2)."""
        np.testing.assert_array_equal(unperturbed_levels(3, 3.0), [1.5, 3.5, 5.5, 7.5])

    def test_symmetric(self):
        """Test the regularized matrix is symmetric."""
        m = delta_eps_matrix(RegularizedProblem(D=3, g=1.0, epsilon=0.2, K=15))
        np.testing.assert_array_equal(m, m.T)

    def test_zero_coupling_is_diagonal(self):
        """Test g=0 leaves the oscillator levels."""
        m = delta_eps_matrix(RegularizedProblem(D=3, g=0.0, epsilon=0.2, K=5))
        np.testing.assert_array_equal(m, np.diag(unperturbed_levels(5, 3.0)))

    def test_overlaps_tend_to_rank_one(self):
        """Test <i|delta_eps|j> -> psi_i(0) psi_j(0) as eps -> 0."""
        overlaps = contact_overlaps(RegularizedProblem(D=3, g=1.0, epsilon=1e-4, K=20))
        v = np.sqrt(psi0_sq_values(20, 3.0))
        np.testing.assert_allclose(overlaps, np.outer(v, v), atol=1e-6)

    def test_contact_matrix(self):
        """Test the rank-one limit matrix entries."""
        m = contact_matrix(3.0, 2.0, 4)
        v = np.sqrt(psi0_sq_values(4, 3.0))
        assert m[1, 3] == pytest.approx(2.0 * v[1] * v[3])
        assert m[2, 2] == pytest.approx(5.5 + 2.0 * v[2] ** 2)

    def test_problem_validation(self):
        """Test epsilon > 0 and K >= 1."""
        with pytest.raises(ValidationError):
            RegularizedProblem(D=3, g=1.0, epsilon=0.0, K=5)
        with pytest.raises(ValidationError):
            RegularizedProblem(D=3, g=1.0, epsilon=0.1, K=0)


class TestEigenvalues:
    """Test the lowest eigenvalues and the rank-one equivalence."""

    def test_lowest_sorted(self):
        """Test count and ordering."""
        values = eigen_lowest(contact_matrix(3.0, 1.0, 10), count=3)
        assert len(values) == 3
        assert values[0] < values[1] < values[2]

    def test_count_validation(self):
        """Test count outside [1, n]."""
        with pytest.raises(ValueError):
            eigen_lowest(np.eye(3), count=0)
        with pytest.raises(ValueError):
            eigen_lowest(np.eye(3), count=4)

    def test_rank_one_matches_secular_solve(self):
        """Test the contact matrix ground level equals the secular root."""
        matrix_energy = eigen_lowest(contact_matrix(3.0, 1.0, 20))[0]
        secular = solve_shift(SpectralProblem(D=3, coupling=1.0, K=20))
        assert matrix_energy == pytest.approx(secular.shift + 1.5, abs=1e-9)

    def test_excited_rank_one_levels(self):
        """Test higher matrix levels match the secular roots n = 1, 2."""
        values = eigen_lowest(contact_matrix(3.0, 1.0, 20), count=3)
        for n in [1, 2]:
            sol = solve_shift(SpectralProblem(D=3, coupling=1.0, K=20, n=n))
            assert values[n] == pytest.approx(sol.energy, abs=1e-9)

    def test_contact_eigenvalues_interlace(self):
        """Test E_i <= lambda_i <= E_{i+1} for the rank-one contact matrix."""
        for D, g, K in [(3.0, 1.0, 20), (2.0, 10.0, 30), (1.5, 0.3, 15)]:
            levels = unperturbed_levels(K, D)
            values = eigen_lowest(contact_matrix(D, g, K), count=K + 1)
            assert np.all(values >= levels - 1e-9)
            assert np.all(values[:-1] <= levels[1:] + 1e-9)

    def test_repulsion_raises_every_level(self):
        """Test every regularized eigenvalue sits above its unperturbed level."""
        problem = RegularizedProblem(D=3, g=2.0, epsilon=0.3, K=8)
        values = eigen_lowest(delta_eps_matrix(problem), count=9)
        assert np.all(values >= unperturbed_levels(8, 3.0) - 1e-9)

    def test_small_width_approaches_contact_limit(self):
        """Test E(eps) -> contact energy at fixed K with an eps^2 rate."""
        contact = eigen_lowest(contact_matrix(3.0, 1.0, 20))[0]
        diffs = [ground_energy(3, 1.0, eps, 20) - contact for eps in [0.01, 0.005]]
        assert abs(diffs[0]) < 1e-2
        assert diffs[0] / diffs[1] == pytest.approx(4.0, abs=1.0)


class TestDoubleLimit:
    """Test the order-of-limits study."""

    def test_fixed_width_converges_above_oscillator(self):
        """Test K -> infinity at eps=0.5 keeps a finite shift."""
        energies = [ground_energy(3, 1.0, 0.5, K) for K in [20, 40, 80]]
        assert abs(energies[2] - energies[1]) < 1e-6
        assert energies[2] > 1.55

    def test_contact_limit_shift_vanishes(self):
        """Test the eps -> 0 column falls towards the oscillator level."""
        contact = [eigen_lowest(contact_matrix(3.0, 1.0, K))[0] for K in [10, 40, 160]]
        assert contact[0] > contact[1] > contact[2] > 1.5

    def test_study_table(self):
        """Test rows on the grid plus the epsilon=0 contact rows."""
        table = double_limit_study(3.0, 1.0, eps_grid=[0.5, 0.2], K_grid=[10, 20])
        assert table.columns == ["epsilon", "K", "E0"]
        assert len(table.rows) == 6
        contact_rows = [row for row in table.rows if row[0] == 0.0]
        assert [row[1] for row in contact_rows] == [10, 20]
        assert table.meta == {"D": 3.0, "g": 1.0}

    def test_study_validation(self):
        """Test grid ordering and positivity."""
        with pytest.raises(ValueError, match="positive"):
            double_limit_study(3.0, 1.0, eps_grid=[0.5, -0.1], K_grid=[10])
        with pytest.raises(ValueError, match="decreasing"):
            double_limit_study(3.0, 1.0, eps_grid=[0.1, 0.5], K_grid=[10])
        with pytest.raises(ValueError, match="increasing"):
            double_limit_study(3.0, 1.0, eps_grid=[0.5], K_grid=[20, 10])

    def test_one_dimension_against_grid_oracle(self):
        """Test D=1, eps=0.1 against a finite-difference solution."""
        energy = ground_energy(1, 1.0, 0.1, 200)
        expected = gaussian_ground_1d_extrapolated(1.0, 0.1)
        assert energy == pytest.approx(expected, abs=1e-3)
