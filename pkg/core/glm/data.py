from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.exceptions import DimensionMismatch


@dataclass
class LogisticData:
    """
    Binary responses y and covariates X of a logistic regression.

    With `has_intercept` the design used by every fitter is X̄ = [1ₙ X];
    otherwise it is X itself.
    """

    y: np.ndarray
    X: np.ndarray
    has_intercept: bool = True
    x_bar: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.y = np.asarray(self.y, dtype=np.float64).ravel()
        n = self.y.shape[0]
        if n < 1:
            raise DimensionMismatch("no observations")
        self.X = np.asarray(self.X, dtype=np.float64)
        if self.X.ndim == 1:
            self.X = self.X.reshape(n, -1) if self.X.size else np.empty((n, 0))
        if self.X.ndim != 2 or self.X.shape[0] != n:
            raise DimensionMismatch(
                f"X has shape {self.X.shape} but y has {n} observations"
            )
        if not np.all((self.y == 0) | (self.y == 1)):
            raise ValueError("responses must be 0 or 1")
        if not np.all(np.isfinite(self.X)):
            raise ValueError("covariates must be finite")
        if self.has_intercept:
            self.x_bar = np.hstack([np.ones((n, 1)), self.X])
        else:
            self.x_bar = self.X
        if self.x_bar.shape[1] == 0:
            raise DimensionMismatch("design has no columns")

    @property
    def n(self):
        return self.y.shape[0]

    @property
    def p(self):
        return self.X.shape[1]

    @property
    def k(self):
        """Number of coefficients, p plus one with an intercept."""
        return self.x_bar.shape[1]

    def flipped(self):
        """Same design with responses y → 1 − y."""
        return LogisticData(1.0 - self.y, self.X, self.has_intercept)


class GlmControl(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    tol: float = Field(default=1e-3, gt=0)
    max_iter: int = Field(default=300, ge=1)
    clamp_eps: float = Field(default=1e-10, gt=0, lt=0.5)
    max_step_halvings: int = Field(default=10, ge=0)
    divergence_guard: float = Field(default=1e4, gt=0)


class FitStatus(str, Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    DIVERGING = "diverging"


@dataclass
class FitResult:
    theta: np.ndarray
    converged: bool
    iterations: int
    score_norm: float
    elapsed: float
    status: FitStatus
    method: str = "mjpl"
    objective_trace: List[float] = field(default_factory=list, repr=False)

    def slopes(self, has_intercept=True):
        """β without β₀."""
        return self.theta[1:] if has_intercept else self.theta

    def intercept(self, has_intercept=True) -> Optional[float]:
        return float(self.theta[0]) if has_intercept else None
