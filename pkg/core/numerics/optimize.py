import numpy as np
from scipy.optimize import minimize

from core.exceptions import NonFiniteObjective


def nelder_mead(f, x0, tol=1e-8, max_iter=2000):
    """
    Derivative-free minimization of f from x0.

    Stops when the simplex diameter falls below tol or after max_iter
    iterations and returns (argmin, min value) for the best vertex seen.
    """
    x0 = np.atleast_1d(np.asarray(x0, dtype=np.float64))
    f0 = float(f(x0))
    if not np.isfinite(f0):
        raise NonFiniteObjective(f"objective is not finite at the start point {x0}")

    def checked(x):
        value = float(f(x))
        if not np.isfinite(value):
            raise NonFiniteObjective(f"objective returned {value} at {x}")
        return value

    res = minimize(
        checked,
        x0,
        method="Nelder-Mead",
        options={"xatol": tol, "fatol": np.inf, "maxiter": max_iter, "maxfev": 20 * max_iter},
    )
    if not res.fun < f0:
        return x0, f0
    return np.asarray(res.x, dtype=np.float64), float(res.fun)
