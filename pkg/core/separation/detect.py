from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.exceptions import MjplError

from .lp import LinearProgram, LpStatus, simplex_solve

SEPARATION_TOL = 1e-7


@dataclass
class SeparationVerdict:
    separated: bool
    certificate: Optional[np.ndarray] = None
    optimum: float = 0.0


def detect_separation(data, tol=SEPARATION_TOL):
    """
    Decide whether the responses are (quasi-)completely separated.

    Solves max Σᵢ sᵢx̄ᵢᵀb subject to sᵢx̄ᵢᵀb ≥ 0 and −1 ≤ bⱼ ≤ 1, with
    sᵢ = 2yᵢ − 1. A zero optimum means the classes overlap and the ML
    estimate exists; a positive optimum is attained at a separating
    direction b, returned as the certificate.
    """
    signed = (2.0 * data.y - 1.0)[:, np.newaxis] * data.x_bar
    lp = LinearProgram(
        objective=signed.sum(axis=0),
        a_ub=-signed,
        b_ub=np.zeros(data.n),
        bounds=[(-1.0, 1.0)] * data.k,
    )
    res = simplex_solve(lp)
    if res.status is not LpStatus.OPTIMAL:
        # b = 0 is feasible and the box keeps the program bounded
        raise MjplError(f"separation program returned {res.status.value}")
    if res.value > tol:
        return SeparationVerdict(True, res.point, res.value)
    return SeparationVerdict(False, None, max(res.value, 0.0))
