import logging
import warnings
from dataclasses import dataclass

import numpy as np
import statsmodels.api as sm

from core.exceptions import DimensionMismatch, NonPositiveResponse, SingularInformation

from .data import GlmControl

logger = logging.getLogger("mjpl")

# The power-law fit needs far tighter tolerances than the logistic fitters.
GAMMA_CONTROL = GlmControl(tol=1e-12, max_iter=100)


@dataclass
class GammaFit:
    coefficients: np.ndarray
    dispersion: float
    deviance_explained: float
    deviance: float
    null_deviance: float
    df_resid: int


def fit_gamma_log(x_design, y, control=None):
    """
    Gamma-response GLM with log link, fitted by IRLS.

    The dispersion is the moment estimator Pearson X² / (N − rank) and
    `deviance_explained` is 1 − deviance / null deviance (1 when the null
    deviance is already zero).
    """
    control = control or GAMMA_CONTROL
    x_design = np.asarray(x_design, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64).ravel()
    if x_design.ndim == 1:
        x_design = x_design[:, np.newaxis]
    if x_design.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"design has {x_design.shape[0]} rows, y has {y.shape[0]}")
    if not np.all(y > 0):
        raise NonPositiveResponse("Gamma responses must be strictly positive")
    rank = np.linalg.matrix_rank(x_design)
    if rank < x_design.shape[1]:
        raise SingularInformation(f"design rank {rank} < {x_design.shape[1]} columns")

    model = sm.GLM(y, x_design, family=sm.families.Gamma(link=sm.families.links.Log()))
    with warnings.catch_warnings():
        # exact multiplicative laws trip the perfect-prediction warning
        warnings.simplefilter("ignore")
        res = model.fit(maxiter=control.max_iter, tol=control.tol, tol_criterion="params")
        deviance = float(res.deviance)
        null_deviance = float(res.null_deviance)

    df_resid = y.shape[0] - rank
    mu = np.asarray(res.fittedvalues, dtype=np.float64)
    pearson = float(np.sum(((y - mu) / mu) ** 2))
    dispersion = pearson / df_resid if df_resid > 0 else 0.0
    explained = 1.0 - deviance / null_deviance if null_deviance > 0 else 1.0
    logger.debug(f"Gamma-log fit: deviance={deviance:.4g}, null={null_deviance:.4g}, phi={dispersion:.4g}")

    return GammaFit(
        coefficients=np.asarray(res.params, dtype=np.float64),
        dispersion=dispersion,
        deviance_explained=explained,
        deviance=deviance,
        null_deviance=null_deviance,
        df_resid=int(df_resid),
    )
