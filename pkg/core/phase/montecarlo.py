import logging

import numpy as np

from core.separation import detect_separation

logger = logging.getLogger("mjpl")

KAPPA_MAX = 0.6
BRACKET_WIDTH = 2e-3
MAX_HALVINGS = 12


def separated_fraction(kappa, beta0, gamma0, n, reps, seed, step=0, intercept=True):
    """Fraction of `reps` simulated datasets at κ whose responses are separated."""
    from core.simulation.datagen import generate_phase_dataset

    hits = 0
    for r in range(reps):
        sample = generate_phase_dataset(
            n, kappa, beta0, gamma0, seed=seed, point_id=step, replicate=r, has_intercept=intercept
        )
        hits += detect_separation(sample.data).separated
    return hits / reps


def mc_phase_boundary(beta0, gamma0, n=2000, reps=20, seed=0, intercept=True):
    """
    Empirical existence threshold by bisection on κ ∈ (0, 0.6).

    At each candidate κ, `reps` datasets with independent standard normal
    covariates are simulated and checked for separation; the boundary is
    where the separated fraction crosses ½. Deterministic given the seed.
    """
    if n < 500:
        raise ValueError(f"n must be >= 500; got {n}")
    if reps < 20:
        raise ValueError(f"reps must be >= 20; got {reps}")

    lo, hi = 0.0, KAPPA_MAX
    for step in range(MAX_HALVINGS):
        if hi - lo < BRACKET_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        frac = separated_fraction(mid, abs(beta0), gamma0, n, reps, seed, step, intercept)
        logger.debug(f"MC boundary step {step}: kappa={mid:.4f}, separated={frac:.2f}")
        if frac >= 0.5:
            hi = mid
        else:
            lo = mid
    boundary = 0.5 * (lo + hi)
    logger.info(f"MC phase boundary at beta0={beta0:.3g}, gamma0={gamma0:.3g}: {boundary:.4f}")
    return float(np.round(boundary, 12))
