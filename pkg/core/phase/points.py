import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field


class PhasePoint(BaseModel):
    """A point (κ, β₀, γ₀) of the existence phase diagram."""

    model_config = ConfigDict(frozen=True)

    kappa: float = Field(gt=0, lt=1)
    beta0: float = 0.0
    gamma0: float = Field(ge=0)

    @computed_field
    @property
    def gamma(self) -> float:
        return math.hypot(self.beta0, self.gamma0)

    @classmethod
    def from_gamma_rho2(cls, kappa, gamma, rho2):
        """β₀ = γρ and γ₀ = γ√(1 − ρ²) with ρ = +√ρ²."""
        return cls(
            kappa=kappa,
            beta0=gamma * math.sqrt(rho2),
            gamma0=gamma * math.sqrt(1.0 - rho2),
        )


class ExistenceMethod(str, Enum):
    ANALYTIC = "analytic"
    MONTE_CARLO = "monte-carlo"


class ExistenceVerdict(BaseModel):
    exists_asymptotically: bool
    h_value: float
    method: ExistenceMethod

    @property
    def label(self):
        return "exists" if self.exists_asymptotically else "not exists"
