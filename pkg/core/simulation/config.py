import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.glm import LogisticData


class BetaStarConfig(str, Enum):
    TRAIN_GRID = "train-grid"
    S1 = "s1"
    S2 = "s2"
    U1 = "u1"
    U2 = "u2"


class CovariateFamily(str, Enum):
    NORMAL_AR1 = "normal-ar1"
    BERNOULLI = "bernoulli"


def covariate_count(n, kappa):
    # round first so that n·κ = 100.0000000001 still gives p = 100
    return max(1, math.ceil(round(n * kappa, 9)))


class SimConfig(BaseModel):
    """One simulated dataset: a design point plus its random stream."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=1)
    kappa: float = Field(gt=0, lt=1)
    gamma: float = Field(ge=0)
    rho2: float = Field(default=0.0, ge=0, lt=1)
    psi: float = Field(default=0.0, gt=-1, lt=1)
    beta_star_config: BetaStarConfig = BetaStarConfig.TRAIN_GRID
    covariate_family: CovariateFamily = CovariateFamily.NORMAL_AR1
    bernoulli_prob: float = Field(default=0.1, gt=0, lt=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    point_id: int = Field(default=0, ge=0)
    replicate: int = Field(default=0, ge=0)
    has_intercept: bool = True

    @property
    def p(self):
        return covariate_count(self.n, self.kappa)

    @property
    def beta0(self):
        return self.gamma * math.sqrt(self.rho2) if self.has_intercept else 0.0

    @property
    def gamma0(self):
        return self.gamma * math.sqrt(1.0 - self.rho2)


@dataclass
class GeneratedSample:
    data: LogisticData
    beta_true: np.ndarray
    beta0_true: float
    realized_signal: float


RECORD_COLUMNS = [
    "point_id",
    "kappa",
    "gamma",
    "rho2",
    "psi",
    "n",
    "p",
    "config",
    "seed",
    "replicate",
    "exists",
    "separated",
    "delta0",
    "delta1",
    "agg_bias",
    "agg_mse",
    "iterations",
    "seconds",
    "status",
    "q",
    "ml_delta0",
    "ml_delta1",
]


class ReplicationRecord(BaseModel):
    point_id: int
    kappa: float
    gamma: float
    rho2: float
    psi: float
    n: int
    p: int
    config: str
    seed: int
    replicate: int
    exists: bool
    separated: Optional[bool] = None
    delta0: float = math.nan
    delta1: float = math.nan
    agg_bias: float = math.nan
    agg_mse: float = math.nan
    iterations: Optional[int] = None
    seconds: Optional[float] = None
    status: str = ""
    q: float = math.nan
    ml_delta0: float = math.nan
    ml_delta1: float = math.nan

    def row(self):
        return [getattr(self, column) for column in RECORD_COLUMNS]


# (kappa, gamma) pairs of the out-of-sample test grid
TEST_POINTS = [
    (0.01, 1.0), (0.01, 8.0), (0.01, 15.0),
    (0.05, 4.5), (0.05, 11.5), (0.05, 18.5),
    (0.15, 1.0), (0.15, 8.0), (0.15, 15.0),
    (0.22, 8.0), (0.22, 15.0),
    (0.25, 4.5), (0.25, 11.5), (0.25, 18.5),
    (0.30, 8.0), (0.30, 15.0),
    (0.35, 1.0), (0.35, 4.5), (0.35, 11.5), (0.35, 18.5),
    (0.40, 8.0), (0.40, 15.0),
    (0.45, 4.5), (0.45, 11.5), (0.45, 18.5),
    (0.50, 8.0), (0.50, 15.0),
    (0.55, 4.5), (0.55, 11.5), (0.55, 18.5),
]
