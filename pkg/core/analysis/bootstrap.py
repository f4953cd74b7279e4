import logging

import numpy as np
import pandas as pd
from scipy.stats import norm
from tqdm import tqdm

from core.exceptions import DegenerateBootstrap, MjplError

from .coefficients import BcaInterval

logger = logging.getLogger("mjpl")

MIN_RESAMPLES = 999


def _take(points, idx):
    if isinstance(points, pd.DataFrame):
        return points.iloc[idx]
    return points[idx]


def _evaluate(statistic, sample):
    try:
        value = np.atleast_1d(np.asarray(statistic(sample), dtype=np.float64))
    except (MjplError, ValueError, np.linalg.LinAlgError):
        return None
    return value if np.all(np.isfinite(value)) else None


def bca_endpoints(boot, estimate, acceleration, level):
    """
    BCa interval of one statistic from its bootstrap replicates.

    The bias correction z₀ is Φ⁻¹ of the fraction of replicates below the
    estimate, clipped to [1/(2B), 1 − 1/(2B)].
    """
    boot = np.asarray(boot, dtype=np.float64)
    size = boot.size
    below = np.clip(np.mean(boot < estimate), 1.0 / (2 * size), 1.0 - 1.0 / (2 * size))
    z0 = float(norm.ppf(below))
    alpha = (1.0 - level) / 2.0
    probs = []
    for z in (norm.ppf(alpha), norm.ppf(1.0 - alpha)):
        shifted = z0 + z
        probs.append(norm.cdf(z0 + shifted / (1.0 - acceleration * shifted)))
    lower, upper = np.quantile(boot, probs)
    return float(lower), float(upper)


def jackknife_acceleration(values):
    values = np.asarray(values, dtype=np.float64)
    dev = values.mean(axis=0) - values
    denom = 6.0 * np.sum(dev ** 2, axis=0) ** 1.5
    num = np.sum(dev ** 3, axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(denom > 0, num / denom, 0.0)


def bootstrap_bca(points, statistic, B=9999, level=0.95, seed=0, progress=False):
    """
    Case-resampling BCa intervals, one per component of `statistic(points)`.

    Rows of `points` (an array or DataFrame) are resampled with replacement
    using `np.random.default_rng(seed)`. Resamples on which the statistic
    fails are dropped; the interval reports how many succeeded.
    """
    if B < MIN_RESAMPLES:
        raise ValueError(f"B must be >= {MIN_RESAMPLES}; got {B}")
    n = len(points)
    estimate = _evaluate(statistic, points)
    if estimate is None:
        raise DegenerateBootstrap("statistic fails on the original sample")

    rng = np.random.default_rng(seed)
    indices = rng.integers(0, n, size=(B, n))
    replicates = []
    for idx in tqdm(indices, desc="bootstrap", disable=not progress):
        value = _evaluate(statistic, _take(points, idx))
        if value is not None:
            replicates.append(value)
    failures = B - len(replicates)
    if failures:
        logger.warning(f"Dropped {failures} of {B} bootstrap resamples whose statistic failed")
    if not replicates:
        raise DegenerateBootstrap("every bootstrap resample failed")
    boot = np.vstack(replicates)
    if np.any(np.ptp(boot, axis=0) == 0):
        raise DegenerateBootstrap("bootstrap statistics are constant")

    jack = [
        _evaluate(statistic, _take(points, np.delete(np.arange(n), i)))
        for i in range(n)
    ]
    jack = np.vstack([v for v in jack if v is not None])
    acceleration = jackknife_acceleration(jack)

    intervals = []
    for j in range(boot.shape[1]):
        lower, upper = bca_endpoints(boot[:, j], estimate[j], acceleration[j], level)
        intervals.append(
            BcaInterval(
                lower=lower,
                upper=upper,
                level=level,
                resamples=boot.shape[0],
                failures=failures,
            )
        )
    return intervals
