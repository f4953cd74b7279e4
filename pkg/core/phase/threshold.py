import logging
from functools import lru_cache

import numpy as np
from scipy.special import expit
from scipy.stats import norm

from core.exceptions import QuadratureUnstable
from core.numerics import nelder_mead, normal_rule

logger = logging.getLogger("mjpl")

DEFAULT_QUAD_NODES = 60
RESTART_TOL = 1e-3

_STARTS_2D = [(0.0, 0.0), (1.0, 1.0), (-1.0, 1.0), (1.0, 3.0), (-2.0, 0.5)]
_STARTS_1D = [(0.0,), (1.0,), (3.0,), (-1.0,), (6.0,)]


def positive_part_moment(c):
    """E[(c − Z)₊²] for Z ~ N(0, 1)."""
    return (c * c + 1.0) * norm.cdf(c) + c * norm.pdf(c)


def _objective(beta0, gamma0, nodes, weights, intercept):
    prob_one = expit(beta0 + gamma0 * nodes)

    def f(t):
        t0, t1 = (t[0], t[1]) if intercept else (0.0, t[0])
        c = t0 + t1 * nodes
        # Y = +1 contributes E[(Z − c)₊²], Y = −1 contributes E[(Z + c)₊²]
        inner = prob_one * positive_part_moment(-c) + (1.0 - prob_one) * positive_part_moment(c)
        return float(np.dot(weights, inner))

    return f


@lru_cache(maxsize=4096)
def h_mle(beta0, gamma0, quad_nodes=DEFAULT_QUAD_NODES, intercept=True):
    """
    Asymptotic threshold on κ = p/n for existence of the logistic MLE.

    h = min over t of E[(Z − Y(t₀ + t₁V))₊²] with V, Z independent N(0, 1),
    Y = ±1 and P(Y = 1 | V) = expit(β₀ + γ₀V). Without an intercept t₀ is
    fixed at zero. The expectation over Z is closed form; the one over V
    uses a Gauss–Hermite rule. Minimized by Nelder–Mead from five starts,
    which must agree to 1e-3.
    """
    if gamma0 < 0:
        raise ValueError(f"gamma0 must be >= 0; got {gamma0}")
    if quad_nodes < 40:
        raise ValueError(f"quad_nodes must be >= 40; got {quad_nodes}")

    nodes, weights = normal_rule(quad_nodes)
    f = _objective(float(beta0), float(gamma0), nodes, weights, intercept)
    starts = _STARTS_2D if intercept else _STARTS_1D
    values = [nelder_mead(f, start, tol=1e-10, max_iter=5000)[1] for start in starts]

    spread = max(values) - min(values)
    if spread > RESTART_TOL:
        raise QuadratureUnstable(
            f"restarts disagree by {spread:.2e} at beta0={beta0}, gamma0={gamma0}"
        )
    h = min(min(values), 0.5)
    logger.debug(f"h_mle(beta0={beta0:.4g}, gamma0={gamma0:.4g}) = {h:.6f}")
    return h
