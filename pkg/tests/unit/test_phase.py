from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import quad
from scipy.stats import norm

from core.exceptions import QuadratureUnstable
from core.phase import (
    ExistenceMethod,
    PhasePoint,
    h_mle,
    mc_phase_boundary,
    mle_exists_asymptotically,
    positive_part_moment,
    separated_fraction,
)


class PositivePartMomentTest(SimpleTestCase):
    def test_matches_numerical_integral(self):
        for c in (-2.0, -0.3, 0.0, 1.1, 2.5):
            numeric, _ = quad(lambda z: (c - z) ** 2 * norm.pdf(z), -np.inf, c)
            self.assertAlmostEqual(positive_part_moment(c), numeric, places=8)

    def test_reflection_identity(self):
        c = np.linspace(-3, 3, 13)
        np.testing.assert_allclose(positive_part_moment(c) + positive_part_moment(-c), c ** 2 + 1, atol=1e-12)


class ThresholdTest(SimpleTestCase):
    def test_vanishing_signal_gives_half(self):
        self.assertAlmostEqual(h_mle(0.0, 1e-3), 0.5, delta=0.01)

    def test_decreases_with_signal(self):
        self.assertLess(h_mle(0.0, 5.0), h_mle(0.0, 1.0))
        self.assertLess(h_mle(0.0, 1.0), 0.5)

    def test_decreases_with_intercept_size(self):
        self.assertLess(h_mle(3.0, 1.0), h_mle(0.0, 1.0))

    def test_symmetric_in_intercept_sign(self):
        self.assertAlmostEqual(h_mle(2.0, 3.0), h_mle(-2.0, 3.0), places=6)

    def test_no_intercept_threshold_is_not_smaller(self):
        self.assertGreaterEqual(h_mle(0.0, 2.0, intercept=False), h_mle(0.0, 2.0) - 1e-9)

    def test_input_checks(self):
        with self.assertRaises(ValueError):
            h_mle(0.0, -1.0)
        with self.assertRaises(ValueError):
            h_mle(0.0, 1.0, quad_nodes=20)

    def test_disagreeing_restarts(self):
        results = [(np.zeros(2), v) for v in (0.30, 0.30, 0.31, 0.30, 0.30)]
        with patch("core.phase.threshold.nelder_mead", side_effect=results):
            with self.assertRaises(QuadratureUnstable):
                h_mle(0.123456, 7.654321)


class PhasePointTest(SimpleTestCase):
    def test_from_gamma_rho2(self):
        point = PhasePoint.from_gamma_rho2(0.1, 10.0, 0.36)
        self.assertAlmostEqual(point.beta0, 6.0)
        self.assertAlmostEqual(point.gamma0, 8.0)
        self.assertAlmostEqual(point.gamma, 10.0)

    def test_validation(self):
        with self.assertRaises(ValueError):
            PhasePoint(kappa=1.2, gamma0=1.0)


class ExistenceTest(SimpleTestCase):
    def test_large_kappa_never_exists(self):
        for beta0, gamma0 in ((0.0, 0.0), (0.0, 1.0), (4.0, 2.0)):
            verdict = mle_exists_asymptotically(PhasePoint(kappa=0.6, beta0=beta0, gamma0=gamma0))
            self.assertFalse(verdict.exists_asymptotically)
            self.assertEqual(verdict.label, "not exists")

    def test_small_kappa_exists(self):
        verdict = mle_exists_asymptotically(PhasePoint(kappa=0.01, beta0=0.0, gamma0=1.0))
        self.assertTrue(verdict.exists_asymptotically)
        self.assertEqual(verdict.method, ExistenceMethod.ANALYTIC)

    def test_tie_means_not_exists(self):
        with patch("core.phase.existence.h_mle", return_value=0.25):
            verdict = mle_exists_asymptotically(PhasePoint(kappa=0.25, gamma0=1.0))
        self.assertFalse(verdict.exists_asymptotically)

    def test_monte_carlo_method_delegates(self):
        with patch("core.phase.existence.mc_phase_boundary", return_value=0.3) as boundary:
            verdict = mle_exists_asymptotically(
                PhasePoint(kappa=0.2, gamma0=1.0), method="monte-carlo", n=600, reps=20, seed=4
            )
        boundary.assert_called_once_with(0.0, 1.0, 600, 20, 4, True)
        self.assertTrue(verdict.exists_asymptotically)
        self.assertEqual(verdict.h_value, 0.3)


class MonteCarloBoundaryTest(SimpleTestCase):
    def test_bisection_finds_step(self):
        def fraction(kappa, *args):
            return 1.0 if kappa >= 0.3137 else 0.0

        with patch("core.phase.montecarlo.separated_fraction", side_effect=fraction) as calls:
            boundary = mc_phase_boundary(0.0, 1.0, n=500, reps=20, seed=1)
        self.assertAlmostEqual(boundary, 0.3137, delta=2e-3)
        self.assertLessEqual(calls.call_count, 12)

    def test_pure_intercept_signal(self):
        self.assertEqual(separated_fraction(0.05, 1.0, 0.0, n=500, reps=3, seed=2), 0.0)
        self.assertEqual(separated_fraction(0.55, 1.0, 0.0, n=500, reps=3, seed=2), 1.0)

    def test_boundary_without_slope_signal(self):
        boundary = mc_phase_boundary(1.0, 0.0, n=500, reps=20, seed=3)
        self.assertAlmostEqual(boundary, h_mle(1.0, 0.0), delta=0.05)

    def test_input_checks(self):
        with self.assertRaises(ValueError):
            mc_phase_boundary(0.0, 1.0, n=100)
        with self.assertRaises(ValueError):
            mc_phase_boundary(0.0, 1.0, reps=5)
