import numpy as np
from scipy import stats

from core.exceptions import DegenerateDesign, LengthMismatch


def simple_linreg(x, y):
    """Ordinary least squares of y on (1, x); returns (intercept, slope)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise LengthMismatch(f"x has shape {x.shape}, y has shape {y.shape}")
    if x.size < 2:
        raise DegenerateDesign("simple regression needs at least two points")
    if np.ptp(x) == 0:
        raise DegenerateDesign("all x values are equal")
    fit = stats.linregress(x, y)
    return float(fit.intercept), float(fit.slope)
