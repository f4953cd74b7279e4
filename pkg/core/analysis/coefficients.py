from pydantic import BaseModel, ConfigDict, Field, model_validator


class RescaleCoefficients(BaseModel):
    """
    Exponents of the power law q(κ, γ, γ₀; b) = κ^b₁ γ^b₂ γ₀^b₃.

    `b0` is the fitted log-intercept and is kept for diagnostics only;
    `phi` is the Gamma dispersion of the fit that produced the values.
    """

    model_config = ConfigDict(frozen=True)

    b0: float = -0.033
    b1: float = -1.172
    b2: float = -1.869
    b3: float = 0.817
    phi: float = Field(default=0.004, ge=0)

    def as_tuple(self):
        return (self.b0, self.b1, self.b2, self.b3)

    def echo(self):
        return f"b0={self.b0:g} b1={self.b1:g} b2={self.b2:g} b3={self.b3:g} phi={self.phi:g}"


PUBLISHED_COEFFICIENTS = RescaleCoefficients()


class BcaInterval(BaseModel):
    lower: float
    upper: float
    level: float = Field(gt=0, lt=1)
    resamples: int = Field(ge=0)
    failures: int = 0

    @model_validator(mode="after")
    def _ordered(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
        return self

    def contains(self, value):
        return self.lower <= value <= self.upper


class PowerLawFit(BaseModel):
    coefficients: RescaleCoefficients
    deviance_explained: float
    n_points: int
    method: str = "gamma-glm"
