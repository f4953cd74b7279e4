import math
from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import SingularInformation, UnknownConfig
from core.glm import FitResult, FitStatus
from core.phase import PhasePoint, h_mle
from core.simulation import (
    RECORD_COLUMNS,
    TEST_POINTS,
    BetaStarConfig,
    CovariateFamily,
    ReplicationRecord,
    SimConfig,
    generate_amse_dataset,
    generate_dataset,
    generate_phase_dataset,
    make_beta_star,
    replicate_rng,
    run_amse_experiment,
    run_replication,
    run_test_experiment,
    run_training_experiment,
    space_filling_design,
)


def truth_fitter(cfg):
    """A fitter that recovers the true coefficients of `cfg` exactly."""
    sample = generate_dataset(cfg)
    theta = np.concatenate([[sample.beta0_true], sample.beta_true])

    def fit(data, control=None):
        return FitResult(theta, True, 1, 0.0, 0.0, FitStatus.CONVERGED)

    return fit


def zero_fitter(data, control=None):
    return FitResult(np.zeros(data.k), True, 1, 0.0, 0.0, FitStatus.CONVERGED)


class BetaStarTest(SimpleTestCase):
    def test_s1(self):
        np.testing.assert_allclose(make_beta_star("s1", 5), [-10, -5, 0, 5, 10])

    def test_s2(self):
        np.testing.assert_array_equal(make_beta_star("s2", 10), [-10, -10, 10, 10, 0, 0, 0, 0, 0, 0])

    def test_u1(self):
        np.testing.assert_array_equal(make_beta_star("u1", 7), [-3, -3, -1, -1, 0, 1, 1])

    def test_grids(self):
        for config in ("train-grid", "u2"):
            beta = make_beta_star(config, 4)
            np.testing.assert_allclose(beta, [1, 4, 7, 10])

    def test_single_coefficient(self):
        self.assertEqual(list(make_beta_star(BetaStarConfig.S2, 1)), [-10.0])

    def test_unknown(self):
        with self.assertRaises(UnknownConfig):
            make_beta_star("s9", 4)
        with self.assertRaises(ValueError):
            make_beta_star("s1", 0)


class SimConfigTest(SimpleTestCase):
    def test_derived_signal(self):
        cfg = SimConfig(n=100, kappa=0.1, gamma=10.0, rho2=0.36)
        self.assertAlmostEqual(cfg.beta0, 6.0)
        self.assertAlmostEqual(cfg.gamma0, 8.0)

    def test_dimension(self):
        self.assertEqual(SimConfig(n=2000, kappa=0.22, gamma=8.0).p, 440)
        self.assertEqual(SimConfig(n=1000, kappa=0.05, gamma=2.0).p, 50)
        self.assertEqual(SimConfig(n=10, kappa=0.01, gamma=1.0).p, 1)

    def test_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            SimConfig(n=100, kappa=0.1, gamma=1.0, rho2=1.0)
        with self.assertRaises(ValueError):
            SimConfig(n=100, kappa=0.1, gamma=1.0, unknown=3)


class GenerateDatasetTest(SimpleTestCase):
    def test_identity_covariance_scaling(self):
        cfg = SimConfig(n=50, kappa=0.1, gamma=3.0, rho2=0.2)
        sample = generate_dataset(cfg)
        beta_star = make_beta_star("train-grid", cfg.p)
        np.testing.assert_allclose(sample.beta_true, cfg.gamma0 * beta_star / np.linalg.norm(beta_star))
        self.assertEqual(sample.data.k, cfg.p + 1)

    def test_realized_signal(self):
        for psi in (0.0, 0.5, -0.7):
            for config in BetaStarConfig:
                cfg = SimConfig(n=60, kappa=0.2, gamma=5.0, rho2=0.3, psi=psi, beta_star_config=config)
                self.assertAlmostEqual(generate_dataset(cfg).realized_signal, cfg.gamma0 ** 2, delta=1e-9)

    def test_linear_predictor_variance(self):
        cfg = SimConfig(n=100000, kappa=5e-5, gamma=2.0, psi=0.5, beta_star_config="s1", seed=3)
        sample = generate_dataset(cfg)
        values = sample.data.X @ sample.beta_true
        standard_error = cfg.gamma0 ** 2 * math.sqrt(2.0 / cfg.n)
        self.assertLess(abs(values.var() - cfg.gamma0 ** 2), 3 * standard_error)

    def test_bernoulli_family(self):
        cfg = SimConfig(
            n=200, kappa=0.05, gamma=4.0, rho2=0.3, beta_star_config="s1",
            covariate_family=CovariateFamily.BERNOULLI, bernoulli_prob=0.1,
        )
        sample = generate_dataset(cfg)
        self.assertTrue(set(np.unique(sample.data.X)) <= {0.0, 1.0})
        self.assertAlmostEqual(0.09 * sample.beta_true @ sample.beta_true, cfg.gamma0 ** 2, places=9)
        self.assertAlmostEqual(sample.realized_signal, cfg.gamma0 ** 2, places=9)

    def test_deterministic_streams(self):
        cfg = SimConfig(n=80, kappa=0.1, gamma=4.0, psi=0.3, seed=42, point_id=3, replicate=1)
        first, second = generate_dataset(cfg), generate_dataset(cfg)
        np.testing.assert_array_equal(first.data.X, second.data.X)
        np.testing.assert_array_equal(first.data.y, second.data.y)
        other = generate_dataset(cfg.model_copy(update={"replicate": 2}))
        self.assertFalse(np.array_equal(first.data.X, other.data.X))

    def test_phase_dataset_matches_independent_design(self):
        cfg = SimConfig(n=80, kappa=0.1, gamma=5.0, rho2=0.36, seed=9, point_id=2, replicate=4)
        direct = generate_phase_dataset(80, 0.1, cfg.beta0, cfg.gamma0, seed=9, point_id=2, replicate=4)
        sample = generate_dataset(cfg)
        np.testing.assert_array_equal(direct.data.X, sample.data.X)
        np.testing.assert_array_equal(direct.data.y, sample.data.y)
        self.assertAlmostEqual(direct.beta0_true, 3.0, places=12)

    def test_phase_dataset_without_slope_signal(self):
        sample = generate_phase_dataset(400, 0.05, 1.0, 0.0, seed=1)
        np.testing.assert_array_equal(sample.beta_true, np.zeros(20))
        self.assertEqual(sample.realized_signal, 0.0)
        self.assertGreater(sample.data.y.mean(), 0.6)

    def test_stream_words(self):
        a = replicate_rng(1, 2, 3).random(4)
        np.testing.assert_array_equal(a, replicate_rng(1, 2, 3).random(4))
        self.assertFalse(np.array_equal(a, replicate_rng(1, 3, 2).random(4)))


class AmseDatasetTest(SimpleTestCase):
    def test_signal_and_design(self):
        cfg = SimConfig(n=200, kappa=0.2, gamma=2.5, beta_star_config="s1", has_intercept=False)
        sample = generate_amse_dataset(cfg)
        self.assertAlmostEqual(sample.beta_true @ sample.beta_true / cfg.p, 6.25, places=9)
        self.assertEqual(sample.data.k, cfg.p)
        self.assertFalse(sample.data.has_intercept)
        self.assertEqual(sample.beta0_true, 0.0)


class SpaceFillingDesignTest(SimpleTestCase):
    def test_box_and_determinism(self):
        design = space_filling_design(100, seed=5)
        self.assertEqual(len(design), 100)
        values = np.array(design)
        self.assertTrue(np.all(values > 0))
        self.assertTrue(np.all(values < [0.6, 20.0, 1.0]))
        self.assertEqual(design, space_filling_design(100, seed=5))
        self.assertNotEqual(design, space_filling_design(100, seed=6))

    def test_existence_flags(self):
        design = space_filling_design(16, seed=5)
        flagged = space_filling_design(16, seed=5, with_existence=True)
        self.assertEqual([row[:3] for row in flagged], design)
        for kappa, gamma, rho2, exists in flagged:
            point = PhasePoint.from_gamma_rho2(kappa, gamma, rho2)
            self.assertEqual(exists, kappa < h_mle(point.beta0, point.gamma0))
        self.assertEqual({row[3] for row in flagged}, {True, False})


class RunReplicationTest(SimpleTestCase):
    def test_perfect_recovery(self):
        cfg = SimConfig(n=200, kappa=0.05, gamma=2.0, seed=1)
        record = run_replication(cfg, fitter=truth_fitter(cfg))
        self.assertTrue(record.exists)
        self.assertEqual(record.q, 1.0)
        self.assertAlmostEqual(record.delta0, 0.0, places=10)
        self.assertAlmostEqual(record.delta1, 1.0, places=10)
        self.assertAlmostEqual(record.agg_bias, 0.0, places=12)
        self.assertAlmostEqual(record.agg_mse, 0.0, places=12)
        self.assertIsNone(record.seconds)

    def test_constant_truth(self):
        cfg = SimConfig(n=20, kappa=0.05, gamma=2.0, beta_star_config="s2", seed=2)
        self.assertEqual(cfg.p, 1)
        record = run_replication(cfg, fitter=truth_fitter(cfg))
        self.assertTrue(math.isnan(record.delta1))
        self.assertIn("degenerate_design", record.status)
        self.assertAlmostEqual(record.agg_bias, 0.0, places=12)

    def test_fit_errors_are_recorded(self):
        def failing(data, control=None):
            raise SingularInformation("collapsed")

        record = run_replication(SimConfig(n=50, kappa=0.1, gamma=1.0), fitter=failing)
        self.assertEqual(record.status, "SingularInformation")
        self.assertTrue(math.isnan(record.delta1))

    def test_ml_refit_errors_are_recorded(self):
        cfg = SimConfig(n=100, kappa=0.05, gamma=1.0, seed=6)
        with patch("core.simulation.replication.fit_ml", side_effect=SingularInformation("collapsed")):
            record = run_replication(cfg, fitter=zero_fitter, fit_ml_when_exists=True)
        self.assertTrue(record.exists)
        self.assertEqual(record.status, "converged;ml_SingularInformation")
        self.assertTrue(math.isnan(record.ml_delta1))

    def test_rescaling_outside_existence_region(self):
        cfg = SimConfig(n=100, kappa=0.5, gamma=10.0, seed=4)
        record = run_replication(cfg, fitter=zero_fitter)
        self.assertFalse(record.exists)
        self.assertGreater(record.q, 0.0)
        self.assertLess(record.q, 1.0)
        self.assertAlmostEqual(record.delta1, 0.0, places=12)

    def test_bernoulli_existence_follows_separation(self):
        cfg = SimConfig(
            n=100, kappa=0.3, gamma=8.0, rho2=0.3, beta_star_config="s1",
            covariate_family="bernoulli", seed=6,
        )
        record = run_replication(cfg, fitter=zero_fitter)
        self.assertIsNotNone(record.separated)
        self.assertEqual(record.exists, not record.separated)

    def test_real_fit_with_timing(self):
        cfg = SimConfig(n=200, kappa=0.05, gamma=2.0, seed=9)
        record = run_replication(cfg, record_timing=True, fit_ml_when_exists=True)
        self.assertTrue(record.status.startswith("converged"))
        self.assertGreaterEqual(record.seconds, 0.0)
        self.assertTrue(np.isfinite(record.ml_delta1))
        self.assertEqual(len(record.row()), len(RECORD_COLUMNS))


def fake_replication(cfg, **options):
    return ReplicationRecord(
        point_id=cfg.point_id, kappa=cfg.kappa, gamma=cfg.gamma, rho2=cfg.rho2, psi=cfg.psi,
        n=cfg.n, p=cfg.p, config=cfg.beta_star_config.value, seed=cfg.seed,
        replicate=cfg.replicate, exists=False, delta0=0.1 * cfg.replicate,
        delta1=[0.4, 0.6][cfg.replicate], status="converged",
    )


class ExperimentTest(SimpleTestCase):
    design = [(0.05, 2.0, 0.0), (0.3, 6.0, 0.2)]

    def test_training_means(self):
        with patch("core.simulation.experiments.run_replication", side_effect=fake_replication):
            tables = run_training_experiment(self.design, n=100, reps=2, seed=3)
        self.assertEqual(list(tables.records.columns), RECORD_COLUMNS)
        self.assertEqual(len(tables.records), 4)
        np.testing.assert_allclose(tables.summary["delta1"], [0.5, 0.5])
        np.testing.assert_allclose(tables.summary["delta0"], [0.05, 0.05])
        np.testing.assert_allclose(tables.summary["gamma0"], [2.0, 6.0 * math.sqrt(0.8)])

    def test_identical_replicates(self):
        cfg = SimConfig(n=100, kappa=0.05, gamma=2.0)
        tables = run_training_experiment([(0.05, 2.0, 0.0)], n=100, reps=3, fitter=truth_fitter(cfg))
        self.assertAlmostEqual(tables.summary["delta1"].iloc[0], tables.records["delta1"].iloc[0])
        self.assertEqual(tables.summary["reps"].iloc[0], 3)

    def test_empty_design(self):
        with self.assertRaises(ValueError):
            run_training_experiment([], n=100, reps=1)

    def test_rerun_is_identical(self):
        first = run_training_experiment(self.design, n=100, reps=2, seed=11)
        second = run_training_experiment(self.design, n=100, reps=2, seed=11)
        self.assertEqual(first.records.to_csv(index=False), second.records.to_csv(index=False))
        self.assertEqual(first.summary.to_csv(index=False), second.summary.to_csv(index=False))

    def test_workers_do_not_change_records(self):
        serial = run_training_experiment(self.design, n=100, reps=2, seed=13)
        parallel = run_training_experiment(self.design, n=100, reps=2, seed=13, workers=2)
        self.assertEqual(serial.records.to_csv(index=False), parallel.records.to_csv(index=False))

    def test_test_grid_size(self):
        tables = run_test_experiment(
            n_values=(100, 200), psi_values=(0.0,), rho2_values=(0.0, 0.5),
            configs=("s1",), seed=1, fitter=zero_fitter,
        )
        self.assertEqual(len(TEST_POINTS), 30)
        self.assertEqual(len(tables.records), 30 * 4)
        self.assertEqual(tables.records["point_id"].nunique(), 120)

    def test_amse_summary(self):
        tables = run_amse_experiment(kappa_grid=(0.1,), gamma_grid=(1.0, 2.0), n=100, reps=2, seed=2)
        self.assertEqual(len(tables.summary), 2)
        self.assertEqual(list(tables.summary["reps"]), [2, 2])
        self.assertTrue(np.all(tables.summary["amse"] > 0))
        self.assertTrue(np.all(tables.records["config"] == "s1"))
