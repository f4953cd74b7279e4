"""Parameter models for the management commands (`--spec` JSON documents)."""
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.phase import ExistenceMethod, PhasePoint
from core.simulation import TEST_POINTS, BetaStarConfig, CovariateFamily
from core.simulation.experiments import (
    AMSE_GAMMAS,
    AMSE_KAPPAS,
    BERNOULLI_GAMMAS,
    BERNOULLI_KAPPAS,
)


class CommandSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(default=0, ge=0, lt=2**64)
    out: Optional[str] = None
    tol: Optional[float] = Field(default=None, gt=0)
    max_iter: Optional[int] = Field(default=None, ge=1)
    b0: Optional[float] = None
    b1: Optional[float] = None
    b2: Optional[float] = None
    b3: Optional[float] = None


class ExperimentSpec(CommandSpec):
    out: str = "results"
    workers: Optional[int] = Field(default=None, ge=1)
    progress: bool = False
    fit_ml: bool = False
    timing: bool = False


class FitSpec(CommandSpec):
    dataset: str
    method: str = Field(default="mjpl", pattern="^(mjpl|ml)$")
    intercept: bool = True


class SimulateSpec(CommandSpec):
    n: int = Field(ge=1)
    kappa: float = Field(gt=0, lt=1)
    gamma: float = Field(ge=0)
    rho2: float = Field(default=0.0, ge=0, lt=1)
    psi: float = Field(default=0.0, gt=-1, lt=1)
    config: BetaStarConfig = BetaStarConfig.TRAIN_GRID
    family: CovariateFamily = CovariateFamily.NORMAL_AR1
    lam: float = Field(default=0.1, gt=0, lt=1)
    replicate: int = Field(default=0, ge=0)
    intercept: bool = True
    truth: Optional[str] = None


class TrainSpec(ExperimentSpec):
    points: int = Field(default=100, ge=1)
    design_seed: Optional[int] = Field(default=None, ge=0)
    n: int = Field(default=2000, ge=1)
    reps: int = Field(default=100, ge=1)


class TestPhaseSpec(ExperimentSpec):
    n_values: List[int] = Field(default=[2000], min_length=1)
    psi_values: List[float] = Field(default=[0.0], min_length=1)
    rho2_values: List[float] = Field(default=[0.0], min_length=1)
    configs: List[BetaStarConfig] = Field(
        default=[BetaStarConfig.S1, BetaStarConfig.S2, BetaStarConfig.U1, BetaStarConfig.U2],
        min_length=1,
    )
    points: List[Tuple[float, float]] = Field(default=list(TEST_POINTS), min_length=1)
    reps: int = Field(default=1, ge=1)


class AmseSpec(ExperimentSpec):
    kappa_grid: List[float] = Field(default=list(AMSE_KAPPAS), min_length=1)
    gamma_grid: List[float] = Field(default=list(AMSE_GAMMAS), min_length=1)
    n: int = Field(default=2000, ge=1)
    reps: int = Field(default=50, ge=1)


class BernoulliSpec(ExperimentSpec):
    kappa_grid: List[float] = Field(default=list(BERNOULLI_KAPPAS), min_length=1)
    gamma_grid: List[float] = Field(default=list(BERNOULLI_GAMMAS), min_length=1)
    rho2: float = Field(default=0.3, ge=0, lt=1)
    n: int = Field(default=2000, ge=1)
    lam: float = Field(default=0.1, gt=0, lt=1)
    config: BetaStarConfig = BetaStarConfig.S1
    reps: int = Field(default=1, ge=1)


class PhaseSpec(CommandSpec):
    """A phase point given as (κ, β₀, γ₀) or as (κ, γ, ρ²)."""

    kappa: float = Field(gt=0, lt=1)
    beta0: Optional[float] = None
    gamma0: Optional[float] = Field(default=None, ge=0)
    gamma: Optional[float] = Field(default=None, ge=0)
    rho2: Optional[float] = Field(default=None, ge=0, lt=1)
    method: ExistenceMethod = ExistenceMethod.ANALYTIC
    quad_nodes: Optional[int] = Field(default=None, ge=40)
    n: int = Field(default=2000, ge=500)
    reps: int = Field(default=20, ge=20)
    intercept: bool = True

    @model_validator(mode="after")
    def _one_parametrization(self):
        direct = self.beta0 is not None or self.gamma0 is not None
        polar = self.gamma is not None or self.rho2 is not None
        if direct and polar:
            raise ValueError("give either beta0/gamma0 or gamma/rho2, not both")
        if polar and self.gamma is None:
            raise ValueError("rho2 needs gamma")
        if not polar and self.gamma0 is None:
            raise ValueError("gamma0 or gamma is required")
        return self

    def point(self):
        if self.gamma is not None:
            return PhasePoint.from_gamma_rho2(self.kappa, self.gamma, self.rho2 or 0.0)
        return PhasePoint(kappa=self.kappa, beta0=self.beta0 or 0.0, gamma0=self.gamma0)


class SeparationSpec(CommandSpec):
    dataset: str
    intercept: bool = True


class RescaleSpec(CommandSpec):
    coefficients: str
    kappa: float = Field(gt=0, lt=1)
    gamma: float = Field(gt=0)
    rho2: float = Field(default=0.0, ge=0, lt=1)
    exists: Optional[bool] = None


class FitBSpec(CommandSpec):
    training: str
    rho2_cutoff: float = Field(default=0.7, gt=0, le=1)
    bootstrap: Optional[int] = Field(default=None, ge=0)
    level: float = Field(default=0.95, gt=0, lt=1)
