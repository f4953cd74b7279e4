import numpy as np
from scipy.special import expit

from core.exceptions import DimensionMismatch, NotPositiveDefinite, SingularInformation
from core.numerics import hat_diagonals, log_det_spd, weighted_xtwx

DEFAULT_CLAMP = 1e-10


def _check_theta(theta, data):
    theta = np.asarray(theta, dtype=np.float64).ravel()
    if theta.shape[0] != data.k:
        raise DimensionMismatch(
            f"theta has {theta.shape[0]} entries, design has {data.k} columns"
        )
    return theta


def fitted_means(theta, data, clamp_eps=DEFAULT_CLAMP):
    """μ = expit(X̄θ) clamped to [eps, 1 − eps]."""
    eta = data.x_bar @ theta
    return np.clip(expit(eta), clamp_eps, 1.0 - clamp_eps)


def log_likelihood(theta, data):
    """ℓ(θ) = Σ {yᵢηᵢ − log(1 + e^ηᵢ)}."""
    theta = _check_theta(theta, data)
    eta = data.x_bar @ theta
    return float(np.sum(data.y * eta - np.logaddexp(0.0, eta)))


def jeffreys_penalty(theta, data, clamp_eps=DEFAULT_CLAMP):
    """½ log|X̄ᵀW(θ)X̄|."""
    theta = _check_theta(theta, data)
    mu = fitted_means(theta, data, clamp_eps)
    try:
        return 0.5 * float(log_det_spd(weighted_xtwx(data.x_bar, mu * (1.0 - mu))))
    except NotPositiveDefinite as e:
        raise SingularInformation(str(e)) from e


def penalized_log_likelihood(theta, data, clamp_eps=DEFAULT_CLAMP):
    return log_likelihood(theta, data) + jeffreys_penalty(theta, data, clamp_eps)


def penalized_score(theta, data, clamp_eps=DEFAULT_CLAMP):
    """Gradient of ℓ + ½ log|X̄ᵀWX̄|: X̄ᵀ{y − μ + h(½ − μ)}."""
    theta = _check_theta(theta, data)
    mu = fitted_means(theta, data, clamp_eps)
    h = hat_diagonals(data.x_bar, mu * (1.0 - mu))
    return data.x_bar.T @ (data.y - mu + h * (0.5 - mu))


def score(theta, data, clamp_eps=DEFAULT_CLAMP):
    """Gradient of ℓ: X̄ᵀ(y − μ)."""
    theta = _check_theta(theta, data)
    mu = fitted_means(theta, data, clamp_eps)
    return data.x_bar.T @ (data.y - mu)
