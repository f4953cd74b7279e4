import logging

import numpy as np
import pandas as pd
import statsmodels.api as sm

from core.glm import fit_gamma_log

from .coefficients import PowerLawFit, RescaleCoefficients

logger = logging.getLogger("mjpl")

RHO2_CUTOFF = 0.7
MIN_POINTS = 5


def select_training_points(points, rho2_cutoff=RHO2_CUTOFF):
    """Rows outside the existence region with ρ² ≤ cutoff and a usable δ₁*."""
    frame = pd.DataFrame(points)
    mask = ~frame["exists"].astype(bool)
    if "rho2" in frame:
        mask &= frame["rho2"] <= rho2_cutoff
    selected = frame.loc[mask]
    finite = np.isfinite(selected["delta1"].to_numpy(dtype=np.float64))
    if not finite.all():
        logger.warning(f"Dropping {int((~finite).sum())} training points without a finite delta1")
        selected = selected.loc[finite]
    if len(selected) < MIN_POINTS:
        raise ValueError(f"power-law fit needs at least {MIN_POINTS} points; got {len(selected)}")
    return selected


def power_law_design(frame):
    return np.column_stack(
        [
            np.ones(len(frame)),
            np.log(frame["kappa"].to_numpy(dtype=np.float64)),
            np.log(frame["gamma"].to_numpy(dtype=np.float64)),
            np.log(frame["gamma0"].to_numpy(dtype=np.float64)),
        ]
    )


def fit_power_law(points, rho2_cutoff=RHO2_CUTOFF):
    """
    Gamma GLM with log link of δ₁* on (1, log κ, log γ, log γ₀).

    `points` is any table with columns kappa, gamma, gamma0, delta1, exists
    and optionally rho2.
    """
    frame = select_training_points(points, rho2_cutoff)
    fit = fit_gamma_log(power_law_design(frame), frame["delta1"].to_numpy(dtype=np.float64))
    b0, b1, b2, b3 = (float(v) for v in fit.coefficients)
    logger.info(
        f"Power-law fit on {len(frame)} points: b=({b0:.4f}, {b1:.4f}, {b2:.4f}, {b3:.4f}), "
        f"phi={fit.dispersion:.5f}"
    )
    return PowerLawFit(
        coefficients=RescaleCoefficients(b0=b0, b1=b1, b2=b2, b3=b3, phi=fit.dispersion),
        deviance_explained=fit.deviance_explained,
        n_points=len(frame),
    )


def fit_power_law_ols(points, rho2_cutoff=RHO2_CUTOFF):
    """Least squares on log δ₁*; `deviance_explained` holds the R²."""
    frame = select_training_points(points, rho2_cutoff)
    delta1 = frame["delta1"].to_numpy(dtype=np.float64)
    if np.any(delta1 <= 0):
        raise ValueError("log-linear fit needs positive delta1")
    ols = sm.OLS(np.log(delta1), power_law_design(frame)).fit()
    b0, b1, b2, b3 = (float(v) for v in ols.params)
    return PowerLawFit(
        coefficients=RescaleCoefficients(b0=b0, b1=b1, b2=b2, b3=b3, phi=float(ols.scale)),
        deviance_explained=float(ols.rsquared),
        n_points=len(frame),
        method="ols",
    )


def power_law_statistic(frame):
    """Fitted (b₀, b₁, b₂, b₃) of an already selected table; for bootstrapping."""
    fit = fit_gamma_log(power_law_design(frame), frame["delta1"].to_numpy(dtype=np.float64))
    return np.asarray(fit.coefficients, dtype=np.float64)
