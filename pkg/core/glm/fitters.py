import logging
import time

import numpy as np
from scipy import linalg as sla

from core.exceptions import NotPositiveDefinite, SingularInformation
from core.numerics import cholesky, weighted_xtwx

from .data import FitResult, FitStatus, GlmControl
from .logistic import fitted_means, log_likelihood, penalized_log_likelihood

logger = logging.getLogger("mjpl")


def _information_factor(data, w):
    try:
        return cholesky(weighted_xtwx(data.x_bar, w))
    except NotPositiveDefinite as e:
        raise SingularInformation(str(e)) from e


def _safe_objective(objective, theta):
    try:
        value = objective(theta)
    except SingularInformation:
        return -np.inf
    return value if np.isfinite(value) else -np.inf


def _halving_search(objective, theta, step, current, max_halvings):
    """
    Try θ + step, θ + step/2, ... and return the first candidate that does
    not decrease the objective. Falls back to the smallest step tried.
    """
    candidate, value = theta, current
    for k in range(max_halvings + 1):
        candidate = theta + step / (2.0 ** k)
        value = _safe_objective(objective, candidate)
        if value >= current:
            return candidate, value, k
    return candidate, value, max_halvings


def _mjpl_direction(theta, data, control):
    mu = fitted_means(theta, data, control.clamp_eps)
    w = mu * (1.0 - mu)
    factor = _information_factor(data, w)
    root_wx = data.x_bar * np.sqrt(w)[:, np.newaxis]
    b = sla.solve_triangular(factor, root_wx.T, lower=True, check_finite=False)
    h = np.einsum("ij,ij->j", b, b)
    adjusted_score = data.x_bar.T @ (data.y - mu + h * (0.5 - mu))
    step = sla.cho_solve((factor, True), adjusted_score, check_finite=False)
    return step, adjusted_score


def fit_mjpl(data, control=None, start=None):
    """
    Maximum Jeffreys'-prior penalized likelihood by quasi-Fisher scoring.

    Each iteration moves θ by (X̄ᵀWX̄)⁻¹ U*(θ), where U* is the
    Jeffreys-adjusted score, halving the step while the penalized
    log-likelihood would decrease. Iteration stops once the L∞ norm of the
    full step is below `control.tol`. Starts at zero unless `start` is
    given.
    """
    control = control or GlmControl()
    started = time.perf_counter()
    theta = np.zeros(data.k) if start is None else np.array(start, dtype=np.float64)

    def objective(t):
        return penalized_log_likelihood(t, data, control.clamp_eps)

    current = objective(theta)
    trace = [current]
    status = FitStatus.MAX_ITERATIONS
    iterations = 0

    for iterations in range(1, control.max_iter + 1):
        step, _ = _mjpl_direction(theta, data, control)
        change = float(np.max(np.abs(step)))
        theta, current, halvings = _halving_search(
            objective, theta, step, current, control.max_step_halvings
        )
        trace.append(current)
        logger.debug(
            f"mJPL iter {iterations}: |step|={change:.3e}, halvings={halvings}, objective={current:.6f}"
        )
        if change < control.tol:
            status = FitStatus.CONVERGED
            break

    _, adjusted_score = _mjpl_direction(theta, data, control)
    result = FitResult(
        theta=theta,
        converged=status is FitStatus.CONVERGED,
        iterations=iterations,
        score_norm=float(np.max(np.abs(adjusted_score))),
        elapsed=time.perf_counter() - started,
        status=status,
        method="mjpl",
        objective_trace=trace,
    )
    if not result.converged:
        logger.warning(f"mJPL did not converge in {control.max_iter} iterations (n={data.n}, k={data.k})")
    return result


def fit_ml(data, control=None, start=None):
    """
    Maximum likelihood by Fisher scoring (IRLS) with step halving.

    On separated data the iterates run off to infinity; the fit then
    reports `FitStatus.DIVERGING` once ‖θ‖∞ passes
    `control.divergence_guard`, the information matrix collapses, or the
    iteration budget runs out. It never claims convergence there.
    """
    control = control or GlmControl()
    started = time.perf_counter()
    theta = np.zeros(data.k) if start is None else np.array(start, dtype=np.float64)

    def objective(t):
        return log_likelihood(t, data)

    current = objective(theta)
    trace = [current]
    status = FitStatus.DIVERGING
    iterations = 0
    score = np.full(data.k, np.nan)

    for iterations in range(1, control.max_iter + 1):
        mu = fitted_means(theta, data, control.clamp_eps)
        score = data.x_bar.T @ (data.y - mu)
        try:
            factor = _information_factor(data, mu * (1.0 - mu))
        except SingularInformation:
            if iterations == 1:
                raise
            logger.warning(f"ML information matrix collapsed at iteration {iterations}")
            break
        step = sla.cho_solve((factor, True), score, check_finite=False)
        change = float(np.max(np.abs(step)))
        theta, current, _ = _halving_search(
            objective, theta, step, current, control.max_step_halvings
        )
        trace.append(current)
        logger.debug(f"ML iter {iterations}: |step|={change:.3e}, loglik={current:.6f}")
        if np.max(np.abs(theta)) > control.divergence_guard:
            logger.warning(f"ML estimates passed the divergence guard {control.divergence_guard:g}")
            break
        if change < control.tol:
            status = FitStatus.CONVERGED
            break

    if status is FitStatus.CONVERGED:
        mu = fitted_means(theta, data, control.clamp_eps)
        score = data.x_bar.T @ (data.y - mu)
    else:
        logger.warning(f"ML fit diverging after {iterations} iterations (n={data.n}, k={data.k})")

    return FitResult(
        theta=theta,
        converged=status is FitStatus.CONVERGED,
        iterations=iterations,
        score_norm=float(np.max(np.abs(score))),
        elapsed=time.perf_counter() - started,
        status=status,
        method="ml",
        objective_trace=trace,
    )
