import logging
import math

import numpy as np

from core.analysis import aggregate_bias, aggregate_mse, q_factor, rescale_estimates
from core.exceptions import DegenerateDesign, MjplError, NonPositiveInput
from core.glm import fit_ml, fit_mjpl
from core.numerics import simple_linreg
from core.phase import DEFAULT_QUAD_NODES, h_mle
from core.separation import detect_separation

from .config import CovariateFamily, ReplicationRecord
from .datagen import generate_dataset

logger = logging.getLogger("mjpl")


def _slope_regression(truth, estimates):
    """(δ₀, δ₁) from regressing estimates on truth; NaNs on a constant truth."""
    try:
        return simple_linreg(truth, estimates)
    except DegenerateDesign:
        return math.nan, math.nan


def run_replication(
    cfg,
    fitter=fit_mjpl,
    control=None,
    coefficients=None,
    fit_ml_when_exists=False,
    generator=generate_dataset,
    quad_nodes=DEFAULT_QUAD_NODES,
    record_timing=False,
    check_separation=None,
):
    """
    Simulate one dataset, fit it and summarize the fit against the truth.

    Fit errors end up in the record's `status` instead of being raised.
    Existence comes from the asymptotic threshold for normal covariates and
    from separation detection for Bernoulli covariates.
    """
    sample = generator(cfg)
    data = sample.data
    bernoulli = cfg.covariate_family is CovariateFamily.BERNOULLI
    if check_separation is None:
        check_separation = bernoulli

    separated = detect_separation(data).separated if check_separation else None
    if bernoulli:
        exists = not separated
    else:
        exists = cfg.kappa < h_mle(cfg.beta0, cfg.gamma0, quad_nodes, cfg.has_intercept)

    record = ReplicationRecord(
        point_id=cfg.point_id,
        kappa=cfg.kappa,
        gamma=cfg.gamma,
        rho2=cfg.rho2,
        psi=cfg.psi,
        n=cfg.n,
        p=cfg.p,
        config=cfg.beta_star_config.value,
        seed=cfg.seed,
        replicate=cfg.replicate,
        exists=exists,
        separated=separated,
    )

    try:
        q = q_factor(cfg.kappa, cfg.gamma, cfg.gamma0, coefficients, exists)
    except NonPositiveInput:
        q = math.nan
    record.q = q

    try:
        fit = fitter(data, control)
    except MjplError as e:
        logger.warning(f"Fit failed at point {cfg.point_id} replicate {cfg.replicate}: {e}")
        record.status = type(e).__name__
        return record

    estimates = fit.slopes(data.has_intercept)
    notes = [fit.status.value]
    record.iterations = fit.iterations
    if record_timing:
        record.seconds = fit.elapsed

    if math.isfinite(q) and q > 0:
        rescaled = rescale_estimates(estimates, q)
        record.agg_bias = aggregate_bias(rescaled, sample.beta_true)
        record.agg_mse = aggregate_mse(rescaled, sample.beta_true)

    record.delta0, record.delta1 = _slope_regression(sample.beta_true, estimates)
    if not np.isfinite(record.delta1):
        notes.append("degenerate_design")

    if fit_ml_when_exists and exists:
        try:
            ml = fit_ml(data, control, start=fit.theta)
        except MjplError as e:
            logger.warning(f"ML refit failed at point {cfg.point_id} replicate {cfg.replicate}: {e}")
            notes.append(f"ml_{type(e).__name__}")
        else:
            if ml.converged:
                record.ml_delta0, record.ml_delta1 = _slope_regression(
                    sample.beta_true, ml.slopes(data.has_intercept)
                )
            else:
                notes.append(f"ml_{ml.status.value}")

    record.status = ";".join(notes)
    return record
