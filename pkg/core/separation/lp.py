import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from core.exceptions import DimensionMismatch, MjplError

logger = logging.getLogger("mjpl")

HIGHS_OPTIONS = {
    "primal_feasibility_tolerance": 1e-9,
    "dual_feasibility_tolerance": 1e-9,
}

Bound = Tuple[Optional[float], Optional[float]]


@dataclass
class LinearProgram:
    """maximize cᵀx subject to A_ub x ≤ b_ub and box bounds on x."""

    objective: np.ndarray
    a_ub: Optional[np.ndarray] = None
    b_ub: Optional[np.ndarray] = None
    bounds: List[Bound] = field(default_factory=list)

    def __post_init__(self):
        self.objective = np.atleast_1d(np.asarray(self.objective, dtype=np.float64))
        d = self.objective.shape[0]
        if not self.bounds:
            self.bounds = [(0.0, None)] * d
        if len(self.bounds) != d:
            raise DimensionMismatch(f"{len(self.bounds)} bounds for {d} variables")
        if self.a_ub is not None:
            self.a_ub = np.atleast_2d(np.asarray(self.a_ub, dtype=np.float64))
            self.b_ub = np.atleast_1d(np.asarray(self.b_ub, dtype=np.float64))
            if self.a_ub.shape[1] != d or self.a_ub.shape[0] != self.b_ub.shape[0]:
                raise DimensionMismatch(
                    f"constraints {self.a_ub.shape} / {self.b_ub.shape} do not match {d} variables"
                )


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass
class LpResult:
    status: LpStatus
    value: Optional[float] = None
    point: Optional[np.ndarray] = None


def _run(c, lp):
    return linprog(
        c,
        A_ub=lp.a_ub,
        b_ub=lp.b_ub,
        bounds=lp.bounds,
        method="highs-ds",
        options=HIGHS_OPTIONS,
    )


def simplex_solve(lp: LinearProgram) -> LpResult:
    """
    Solve with the HiGHS dual simplex.

    HiGHS may report "infeasible or unbounded" without deciding; a
    zero-objective phase-one solve settles which one it is.
    """
    res = _run(-lp.objective, lp)
    if res.status == 0:
        return LpResult(LpStatus.OPTIMAL, float(-res.fun), np.asarray(res.x))
    if res.status in (2, 3):
        feasibility = _run(np.zeros_like(lp.objective), lp)
        if feasibility.status == 0:
            return LpResult(LpStatus.UNBOUNDED)
        return LpResult(LpStatus.INFEASIBLE)
    logger.error(f"LP solver failed: {res.message}")
    raise MjplError(f"LP solver failed: {res.message}")
