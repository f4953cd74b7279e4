import numpy as np

from core.exceptions import (
    DegenerateObservations,
    LengthMismatch,
    NonPositiveInput,
    NonPositiveScale,
)

from .coefficients import PUBLISHED_COEFFICIENTS


def q_factor(kappa, gamma, gamma0, b=None, exists=False):
    """
    Scaling factor for mJPL estimates: 1 where the MLE exists, otherwise
    κ^b₁ γ^b₂ γ₀^b₃. The log-intercept b₀ is not used.
    """
    if kappa <= 0 or gamma <= 0 or gamma0 <= 0:
        raise NonPositiveInput(
            f"kappa, gamma and gamma0 must be positive; got {kappa}, {gamma}, {gamma0}"
        )
    if exists:
        return 1.0
    b = b or PUBLISHED_COEFFICIENTS
    return float(np.exp(b.b1 * np.log(kappa) + b.b2 * np.log(gamma) + b.b3 * np.log(gamma0)))


def rescale_estimates(beta_tilde, q):
    if not q > 0:
        raise NonPositiveScale(f"scaling factor must be positive; got {q}")
    return np.asarray(beta_tilde, dtype=np.float64) / q


def _paired(estimates, truth):
    est = np.asarray(estimates, dtype=np.float64).ravel()
    tru = np.asarray(truth, dtype=np.float64).ravel()
    if est.shape != tru.shape or est.size == 0:
        raise LengthMismatch(f"{est.size} estimates against {tru.size} true values")
    return est, tru


def aggregate_bias(estimates, truth):
    est, tru = _paired(estimates, truth)
    return float(np.mean(est - tru))


def aggregate_mse(estimates, truth):
    est, tru = _paired(estimates, truth)
    return float(np.mean((est - tru) ** 2))


def r2_test(observed_log_delta1, predicted_log_q):
    """Out-of-sample R², 1 − SSres/SStot; bounded above by 1."""
    obs, pred = _paired(observed_log_delta1, predicted_log_q)
    if obs.size < 2:
        raise DegenerateObservations("need at least two observations")
    ss_tot = float(np.sum((obs - obs.mean()) ** 2))
    if ss_tot == 0:
        raise DegenerateObservations("observed values have zero variance")
    ss_res = float(np.sum((obs - pred) ** 2))
    return 1.0 - ss_res / ss_tot
