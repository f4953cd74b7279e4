import logging
import math

import numpy as np
from scipy.linalg import toeplitz
from scipy.special import expit
from scipy.stats import qmc

from core.exceptions import UnknownConfig
from core.glm import LogisticData
from core.numerics import cholesky
from core.phase import DEFAULT_QUAD_NODES, PhasePoint, mle_exists_asymptotically

from .config import BetaStarConfig, CovariateFamily, GeneratedSample, covariate_count
from .streams import replicate_rng

logger = logging.getLogger("mjpl")

DESIGN_BOX = ([0.0, 0.0, 0.0], [0.6, 20.0, 1.0])


def make_beta_star(config, p):
    """Unscaled coefficient pattern of length p; k = ⌈p/5⌉ sets the block size."""
    if p < 1:
        raise ValueError(f"p must be >= 1; got {p}")
    try:
        config = BetaStarConfig(config)
    except ValueError as e:
        raise UnknownConfig(f"unknown beta* configuration {config!r}") from e

    k = math.ceil(p / 5)
    if config in (BetaStarConfig.TRAIN_GRID, BetaStarConfig.U2):
        return np.linspace(1.0, 10.0, p)
    if config is BetaStarConfig.S1:
        return np.linspace(-10.0, 10.0, p)

    beta = np.zeros(p)
    if config is BetaStarConfig.S2:
        beta[:k] = -10.0
        beta[k:2 * k] = 10.0
    else:
        beta[:k] = -3.0
        beta[k:2 * k] = -1.0
        # last block wins when p is small and blocks overlap
        beta[p - k:] = 1.0
    return beta


def ar1_covariance(p, psi):
    return toeplitz(psi ** np.arange(p, dtype=np.float64))


def _responses(rng, beta0, x, beta):
    eta = beta0 + x @ beta
    return (rng.random(x.shape[0]) < expit(eta)).astype(np.float64)


def generate_dataset(cfg):
    """
    Draw covariates and responses for one replicate of `cfg`.

    Normal family: rows N(0, Σ) with Σᵢⱼ = ψ^|i−j| and β scaled so that
    βᵀΣβ = γ₀². Bernoulli family: i.i.d. Bernoulli(λ) entries with β scaled
    so that λ(1 − λ)‖β‖² = γ₀².
    """
    rng = replicate_rng(cfg.seed, cfg.point_id, cfg.replicate)
    p, n = cfg.p, cfg.n
    beta_star = make_beta_star(cfg.beta_star_config, p)

    if cfg.covariate_family is CovariateFamily.NORMAL_AR1:
        factor = cholesky(ar1_covariance(p, cfg.psi)) if cfg.psi != 0 else np.eye(p)
        beta = cfg.gamma0 * beta_star / np.linalg.norm(factor.T @ beta_star)
        x = rng.standard_normal((n, p)) @ factor.T
        projected = factor.T @ beta
        realized = float(projected @ projected)
    else:
        lam = cfg.bernoulli_prob
        scale = math.sqrt(lam * (1.0 - lam))
        beta = cfg.gamma0 * beta_star / (scale * np.linalg.norm(beta_star))
        x = (rng.random((n, p)) < lam).astype(np.float64)
        realized = float(lam * (1.0 - lam) * beta @ beta)

    y = _responses(rng, cfg.beta0, x, beta)
    return GeneratedSample(
        data=LogisticData(y, x, has_intercept=cfg.has_intercept),
        beta_true=beta,
        beta0_true=cfg.beta0,
        realized_signal=realized,
    )


def generate_phase_dataset(
    n, kappa, beta0, gamma0, seed=0, point_id=0, replicate=0, has_intercept=True
):
    """
    Independent standard normal covariates with intercept β₀ and slopes
    scaled to ‖β‖ = γ₀, given directly rather than through (γ, ρ²) so that
    γ₀ = 0 with β₀ ≠ 0 is allowed. Same stream and draw order as
    `generate_dataset` with ψ = 0.
    """
    if gamma0 < 0:
        raise ValueError(f"gamma0 must be >= 0; got {gamma0}")
    rng = replicate_rng(seed, point_id, replicate)
    p = covariate_count(n, kappa)
    beta_star = make_beta_star(BetaStarConfig.TRAIN_GRID, p)
    beta = gamma0 * beta_star / np.linalg.norm(beta_star)
    x = rng.standard_normal((n, p))
    intercept = beta0 if has_intercept else 0.0
    y = _responses(rng, intercept, x, beta)
    return GeneratedSample(
        data=LogisticData(y, x, has_intercept=has_intercept),
        beta_true=beta,
        beta0_true=intercept,
        realized_signal=float(beta @ beta),
    )


def generate_amse_dataset(cfg):
    """
    No-intercept design with N(0, 1/p) covariates and configuration s1
    scaled so that ‖β‖²/p = γ². Only n, κ, γ and the stream fields of
    `cfg` are used.
    """
    rng = replicate_rng(cfg.seed, cfg.point_id, cfg.replicate)
    p, n = cfg.p, cfg.n
    beta_star = make_beta_star(BetaStarConfig.S1, p)
    beta = cfg.gamma * math.sqrt(p) * beta_star / np.linalg.norm(beta_star)
    x = rng.standard_normal((n, p)) / math.sqrt(p)
    y = _responses(rng, 0.0, x, beta)
    return GeneratedSample(
        data=LogisticData(y, x, has_intercept=False),
        beta_true=beta,
        beta0_true=0.0,
        realized_signal=float(beta @ beta) / p,
    )


def space_filling_design(points=100, seed=0, with_existence=False, quad_nodes=DEFAULT_QUAD_NODES):
    """
    Scrambled Sobol sample of (κ, γ, ρ²) over (0, 0.6) × (0, 20) × (0, 1).
    Returns a list of (kappa, gamma, rho2) tuples, or (kappa, gamma, rho2,
    exists) with `with_existence`, where `exists` is the analytic verdict.
    """
    if points < 1:
        raise ValueError(f"points must be >= 1; got {points}")
    sobol = qmc.Sobol(d=3, scramble=True, seed=seed)
    unit = sobol.random_base2(m=max(1, math.ceil(math.log2(points))))[:points]
    scaled = qmc.scale(unit, *DESIGN_BOX)
    logger.debug(f"Space-filling design of {points} points (seed={seed})")
    design = [tuple(float(v) for v in row) for row in scaled]
    if not with_existence:
        return design
    return [
        (kappa, gamma, rho2, _exists(kappa, gamma, rho2, quad_nodes))
        for kappa, gamma, rho2 in design
    ]


def _exists(kappa, gamma, rho2, quad_nodes):
    point = PhasePoint.from_gamma_rho2(kappa, gamma, rho2)
    return mle_exists_asymptotically(point, quad_nodes=quad_nodes).exists_asymptotically
