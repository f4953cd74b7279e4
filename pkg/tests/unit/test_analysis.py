import itertools
import math

import numpy as np
import pandas as pd
from django.test import SimpleTestCase

from core.analysis import (
    PUBLISHED_COEFFICIENTS,
    BcaInterval,
    RescaleCoefficients,
    aggregate_bias,
    aggregate_mse,
    bca_endpoints,
    bootstrap_bca,
    fit_power_law,
    fit_power_law_ols,
    q_factor,
    r2_test,
    r2_test_table,
    rescale_estimates,
    summarize_training,
)
from core.exceptions import (
    DegenerateBootstrap,
    DegenerateObservations,
    LengthMismatch,
    NonPositiveInput,
    NonPositiveScale,
)


def power_law_points(b=(0.0, -1.0, -2.0, 1.0), noise=None, seed=0):
    rng = np.random.default_rng(seed)
    rows = []
    for kappa, gamma, rho2 in itertools.product((0.2, 0.3, 0.45), (4.0, 9.0, 15.0), (0.0, 0.3, 0.6)):
        gamma0 = gamma * math.sqrt(1 - rho2)
        mean = math.exp(b[0]) * kappa ** b[1] * gamma ** b[2] * gamma0 ** b[3]
        delta1 = mean if noise is None else mean * rng.gamma(1 / noise, noise)
        rows.append(dict(kappa=kappa, gamma=gamma, gamma0=gamma0, rho2=rho2, exists=False, delta1=delta1))
    return pd.DataFrame(rows)


class CoefficientsTest(SimpleTestCase):
    def test_published_values(self):
        b = PUBLISHED_COEFFICIENTS
        self.assertEqual(b.as_tuple(), (-0.033, -1.172, -1.869, 0.817))
        self.assertLess(b.b1, -1)
        self.assertLess(b.b2, -1)
        self.assertGreater(b.b3, 0)

    def test_interval_order(self):
        with self.assertRaises(ValueError):
            BcaInterval(lower=2.0, upper=1.0, level=0.95, resamples=999)


class QFactorTest(SimpleTestCase):
    def test_existing_mle(self):
        self.assertEqual(q_factor(0.2, 10.0, 10.0, exists=True), 1.0)

    def test_published_evaluation(self):
        self.assertAlmostEqual(q_factor(0.2, 10.0, 10.0, PUBLISHED_COEFFICIENTS), 0.585, delta=1e-3)

    def test_increases_with_gamma0(self):
        self.assertLess(q_factor(0.3, 10.0, 6.0), q_factor(0.3, 10.0, 9.0))

    def test_log_linear(self):
        b = RescaleCoefficients(b0=5.0, b1=-1.5, b2=-2.0, b3=0.5)
        value = math.log(q_factor(0.4, 3.0, 2.0, b))
        self.assertAlmostEqual(value, -1.5 * math.log(0.4) - 2.0 * math.log(3.0) + 0.5 * math.log(2.0), places=12)

    def test_non_positive(self):
        with self.assertRaises(NonPositiveInput):
            q_factor(0.0, 1.0, 1.0)
        with self.assertRaises(NonPositiveInput):
            q_factor(0.1, 1.0, 0.0, exists=True)


class RescaleTest(SimpleTestCase):
    def test_identity_and_halving(self):
        np.testing.assert_array_equal(rescale_estimates([1.5, -2.0], 1.0), [1.5, -2.0])
        np.testing.assert_array_equal(rescale_estimates([2.0, 4.0], 2.0), [1.0, 2.0])

    def test_inverse_pair(self):
        beta = np.array([0.3, -7.1, 2.2])
        np.testing.assert_allclose(rescale_estimates(rescale_estimates(beta, 0.37), 1 / 0.37), beta, atol=1e-12)

    def test_existing_mle_leaves_estimates(self):
        beta = np.array([0.3, -7.1])
        np.testing.assert_array_equal(rescale_estimates(beta, q_factor(0.1, 2.0, 2.0, exists=True)), beta)

    def test_non_positive_scale(self):
        with self.assertRaises(NonPositiveScale):
            rescale_estimates([1.0], 0.0)


class AggregateTest(SimpleTestCase):
    def test_exact(self):
        self.assertEqual(aggregate_bias([1.0, 2.0], [1.0, 2.0]), 0.0)
        self.assertEqual(aggregate_mse([1.0, 2.0], [1.0, 2.0]), 0.0)

    def test_constant_offset(self):
        self.assertAlmostEqual(aggregate_bias([3.0, 3.0, 3.0], [0.0, 0.0, 0.0]), 3.0)
        self.assertAlmostEqual(aggregate_mse([3.0, 3.0, 3.0], [0.0, 0.0, 0.0]), 9.0)

    def test_hand_case(self):
        self.assertAlmostEqual(aggregate_bias([1.0, 3.0], [0.0, 0.0]), 2.0)
        self.assertAlmostEqual(aggregate_mse([1.0, 3.0], [0.0, 0.0]), 5.0)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            aggregate_bias([1.0], [1.0, 2.0])
        with self.assertRaises(LengthMismatch):
            aggregate_mse([], [])


class PowerLawTest(SimpleTestCase):
    def test_noiseless_recovery(self):
        fit = fit_power_law(power_law_points())
        b = fit.coefficients
        np.testing.assert_allclose([b.b0, b.b1, b.b2, b.b3], [0.0, -1.0, -2.0, 1.0], atol=1e-8)
        self.assertAlmostEqual(fit.deviance_explained, 1.0, places=8)
        self.assertEqual(fit.n_points, 27)

    def test_gamma_and_ols_agree(self):
        points = power_law_points(b=(-0.03, -1.17, -1.87, 0.82), noise=0.004, seed=3)
        gamma_fit = fit_power_law(points).coefficients.as_tuple()
        ols_fit = fit_power_law_ols(points)
        for a, b in zip(gamma_fit, ols_fit.coefficients.as_tuple()):
            self.assertLess(abs(a - b), 0.05)
        self.assertGreater(ols_fit.deviance_explained, 0.9)

    def test_filters_existing_and_high_rho2(self):
        points = power_law_points()
        points.loc[0, "exists"] = True
        points.loc[1, "rho2"] = 0.9
        points.loc[2, "delta1"] = np.nan
        self.assertEqual(fit_power_law(points).n_points, 24)

    def test_too_few_points(self):
        with self.assertRaises(ValueError):
            fit_power_law(power_law_points().head(4))


class BootstrapTest(SimpleTestCase):
    def test_percentile_reduction(self):
        boot = np.arange(1, 1001, dtype=float)
        lower, upper = bca_endpoints(boot, 500.5, 0.0, 0.95)
        expected = np.quantile(boot, [0.025, 0.975])
        self.assertAlmostEqual(lower, expected[0])
        self.assertAlmostEqual(upper, expected[1])

    def test_symmetric_mean(self):
        z = np.random.default_rng(1).normal(size=100)
        data = np.concatenate([z, -z])
        (interval,) = bootstrap_bca(data, np.mean, B=1999, seed=4)
        self.assertLess(interval.lower, 0.0)
        self.assertGreater(interval.upper, 0.0)
        width = interval.upper - interval.lower
        self.assertLess(abs(interval.upper + interval.lower), 0.15 * width)
        self.assertEqual(interval.resamples, 1999)

    def test_deterministic(self):
        data = np.random.default_rng(2).exponential(size=60)
        first = bootstrap_bca(data, np.mean, B=1999, level=0.95, seed=8)
        second = bootstrap_bca(data, np.mean, B=1999, level=0.95, seed=8)
        self.assertEqual(first, second)

    def test_contains_estimate(self):
        data = np.random.default_rng(3).gamma(2.0, size=80)
        for level in (0.5, 0.9):
            (interval,) = bootstrap_bca(data, np.mean, B=999, level=level, seed=1)
            self.assertTrue(interval.contains(float(np.mean(data))))

    def test_vector_statistic_on_frame(self):
        frame = pd.DataFrame({"a": np.arange(30.0), "b": np.arange(30.0) ** 2})
        intervals = bootstrap_bca(frame, lambda f: f.mean().to_numpy(), B=999, seed=0)
        self.assertEqual(len(intervals), 2)
        self.assertTrue(intervals[0].contains(14.5))

    def test_failed_resamples_are_dropped(self):
        data = np.arange(20.0)

        def statistic(sample):
            if sample.max() < 19:
                raise ValueError("resample lacks the largest point")
            return sample.mean()

        (interval,) = bootstrap_bca(data, statistic, B=999, seed=5)
        self.assertGreater(interval.failures, 0)
        self.assertEqual(interval.resamples + interval.failures, 999)

    def test_degenerate(self):
        with self.assertRaises(DegenerateBootstrap):
            bootstrap_bca(np.ones(10), np.mean, B=999)

    def test_resample_count(self):
        with self.assertRaises(ValueError):
            bootstrap_bca(np.arange(5.0), np.mean, B=100)


class R2TestTest(SimpleTestCase):
    def test_contract(self):
        obs = np.array([0.1, 0.7, -0.2, 1.4])
        self.assertEqual(r2_test(obs, obs), 1.0)
        self.assertAlmostEqual(r2_test(obs, np.full(4, obs.mean())), 0.0, places=12)
        self.assertAlmostEqual(r2_test([0.0, 1.0], [1.0, 0.0]), -3.0, places=12)

    def test_never_above_one(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            obs = rng.normal(size=10)
            self.assertLessEqual(r2_test(obs, obs + rng.normal(scale=0.1, size=10)), 1.0)

    def test_degenerate(self):
        with self.assertRaises(DegenerateObservations):
            r2_test([1.0, 1.0, 1.0], [0.0, 1.0, 2.0])
        with self.assertRaises(DegenerateObservations):
            r2_test([1.0], [1.0])


class SummaryTest(SimpleTestCase):
    def test_summarize_training(self):
        records = pd.DataFrame({
            "point_id": [0, 0, 1, 1],
            "kappa": [0.1, 0.1, 0.3, 0.3],
            "gamma": [2.0, 2.0, 5.0, 5.0],
            "rho2": [0.0, 0.0, 0.36, 0.36],
            "exists": [True, True, False, False],
            "delta0": [0.0, 0.2, 0.1, 0.1],
            "delta1": [1.0, 1.2, 0.4, np.nan],
        })
        summary = summarize_training(records)
        np.testing.assert_allclose(summary["delta1"], [1.1, 0.4])
        np.testing.assert_allclose(summary["beta0"], [0.0, 3.0])
        np.testing.assert_allclose(summary["gamma0"], [2.0, 4.0])
        self.assertEqual(list(summary["reps"]), [2, 1])

    def test_r2_table_with_exact_predictions(self):
        b = PUBLISHED_COEFFICIENTS
        rows = []
        for n, (kappa, gamma) in itertools.product((500, 1000), ((0.3, 5.0), (0.4, 8.0), (0.5, 12.0))):
            rows.append(dict(n=n, psi=0.0, rho2=0.0, config="s1", kappa=kappa, gamma=gamma,
                             exists=False, delta1=q_factor(kappa, gamma, gamma, b)))
        rows.append(dict(n=500, psi=0.0, rho2=0.0, config="s1", kappa=0.01, gamma=1.0,
                         exists=True, delta1=1.0))
        table = r2_test_table(pd.DataFrame(rows), b)
        self.assertEqual(list(table["n"]), [500, 1000])
        self.assertEqual(list(table["points"]), [3, 3])
        np.testing.assert_allclose(table["r2_test"], [1.0, 1.0])
