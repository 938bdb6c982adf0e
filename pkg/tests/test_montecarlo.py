"""Tests for the Monte Carlo N-particle bound."""

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from unittest.mock import patch

import numpy as np
import pytest

from deltalab.config.settings import settings
from deltalab.core.exceptions import RejectionRateError
from deltalab.variational import (
    CorrelationFactor,
    nbody_bound_mc,
    nbody_sweep,
    trial_gradients,
    two_particle_bound,
)


def reversed_map(fn, items):
    """Evaluate in reverse order, return in input order."""
    items = list(items)
    results = [fn(item) for item in reversed(items)]
    return list(reversed(results))


class TestTrialGradients:
    """Test the product wave function and its gradients."""

    def test_gradients_match_finite_differences(self):
        """Test grad_i F against central differences."""
        rng = np.random.default_rng(7)
        x = rng.normal(scale=0.6, size=(4, 3, 3))
        factor = CorrelationFactor.gaussian(0.5)
        _, grads, _ = trial_gradients(x, factor)
        h = 1e-5
        for i, d in product(range(3), range(3)):
            step = np.zeros_like(x)
            step[:, i, d] = h
            up, _, _ = trial_gradients(x + step, factor)
            down, _, _ = trial_gradients(x - step, factor)
            numeric = (up - down) / (2 * h)
            np.testing.assert_allclose(grads[:, i, d], numeric, rtol=1e-6, atol=1e-10)

    def test_product_and_smallest_factor(self):
        """Test F is the product of pair factors."""
        x = np.array([[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 2.0, 0.0]]])
        factor = CorrelationFactor.gaussian(1.0)
        F, _, smallest = trial_gradients(x, factor)
        pairs = [1.0, 2.0, math.sqrt(5.0)]
        expected = math.prod(1.0 - math.exp(-r * r) for r in pairs)
        assert F[0] == pytest.approx(expected, rel=1e-14)
        assert smallest[0] == pytest.approx(1.0 - math.exp(-1.0), rel=1e-14)

    def test_gradients_sum_to_zero(self):
        """Test translation invariance: sum_i grad_i F = 0."""
        rng = np.random.default_rng(3)
        x = rng.normal(size=(10, 4, 3))
        _, grads, _ = trial_gradients(x, CorrelationFactor.gaussian(0.3))
        np.testing.assert_allclose(grads.sum(axis=1), 0.0, atol=1e-12)


class TestMonteCarloBound:
    """Test the sampled bound."""

    def test_identity_factor(self):
        """Test f = 1 gives no correction and unit norm."""
        estimate = nbody_bound_mc(
            3, 3, 0.1, 1000, seed=1, factor=CorrelationFactor.identity()
        )
        assert estimate.correction == 0.0
        assert estimate.norm == 1.0
        assert estimate.E0 == 4.5
        assert estimate.bound == 4.5

    def test_same_seed_reproducible(self):
        """Test identical estimates for identical seeds."""
        a = nbody_bound_mc(3, 3, 0.2, 5000, seed=42, block_size=1024)
        b = nbody_bound_mc(3, 3, 0.2, 5000, seed=42, block_size=1024)
        assert a == b

    def test_independent_of_block_scheduling(self):
        """Test serial, threaded and reversed block order agree bitwise."""
        kwargs = {"samples": 10000, "seed": 5, "block_size": 1000}
        serial = nbody_bound_mc(3, 3, 0.2, **kwargs)
        with ThreadPoolExecutor(max_workers=4) as executor:
            threaded = nbody_bound_mc(3, 3, 0.2, mapper=executor.map, **kwargs)
        backwards = nbody_bound_mc(3, 3, 0.2, mapper=reversed_map, **kwargs)
        assert serial.correction == threaded.correction == backwards.correction
        assert serial.norm == threaded.norm == backwards.norm

    def test_seed_changes_estimate(self):
        """Test different seeds give different samples."""
        a = nbody_bound_mc(3, 3, 0.2, 2000, seed=1)
        b = nbody_bound_mc(3, 3, 0.2, 2000, seed=2)
        assert a.correction != b.correction
        assert a.seed == 1 and a.samples == 2000

    def test_two_particles_match_quadrature(self):
        """Test N=2 against the relative-coordinate quadrature at b / sqrt 2."""
        b = 0.2
        mc = nbody_bound_mc(2, 3, b, 200_000, seed=11)
        exact = two_particle_bound(3.0, b / math.sqrt(2.0))
        assert abs(mc.correction - exact.correction) < 3.0 * mc.stderr
        assert mc.norm == pytest.approx(exact.norm, abs=1e-2)

    def test_argument_validation(self):
        """Test N, D and sample count checks."""
        with pytest.raises(ValueError, match="two particles"):
            nbody_bound_mc(1, 3, 0.1, 100, seed=0)
        with pytest.raises(ValueError, match="integer >= 3"):
            nbody_bound_mc(3, 2, 0.1, 100, seed=0)
        with pytest.raises(ValueError, match="integer >= 3"):
            nbody_bound_mc(3, 3.5, 0.1, 100, seed=0)
        with pytest.raises(ValueError, match="two samples"):
            nbody_bound_mc(3, 3, 0.1, 1, seed=0)

    def test_rejection_rate(self):
        """Test too many underflowing factors abort the estimate."""
        with patch.object(settings, "mc_underflow_threshold", 0.5):
            with pytest.raises(RejectionRateError) as exc_info:
                nbody_bound_mc(3, 3, 1.0, 1000, seed=0)
        assert exc_info.value.exit_code == 4
        assert exc_info.value.details["samples"] == 1000


class TestNBodySweep:
    """Test the radius sweep."""

    def test_sweep_layout(self):
        """Test columns, metadata and one seed for all radii."""
        table = nbody_sweep(3, 3, [0.2, 0.4], samples=20000, seed=9)
        assert table.columns == [
            "b",
            "correction",
            "stderr",
            "norm",
            "bound",
            "rejected",
            "fitted_slope",
        ]
        assert table.meta["seed"] == 9
        assert table.meta["E0"] == 4.5
        assert table.column("rejected") == [0, 0]
        assert table.column("correction")[0] < table.column("correction")[1]
