from functools import lru_cache

from django.conf import settings
from pydantic import BaseModel, Field

from core.analysis import RescaleCoefficients
from core.glm import GlmControl


class EngineSettings(BaseModel):
    glm_tol: float = Field(default=1e-3, gt=0)
    glm_max_iter: int = Field(default=300, ge=1)
    clamp_eps: float = Field(default=1e-10, gt=0, lt=0.5)
    max_step_halvings: int = Field(default=10, ge=0)
    ml_divergence_guard: float = Field(default=1e4, gt=0)
    quad_nodes: int = Field(default=60, ge=40)
    separation_tol: float = Field(default=1e-7, gt=0)
    workers: int = Field(default=1, ge=1)
    bootstrap_samples: int = Field(default=9999, ge=999)
    b0: float = -0.033
    b1: float = -1.172
    b2: float = -1.869
    b3: float = 0.817
    phi: float = Field(default=0.004, ge=0)


@lru_cache(maxsize=1)
def get_engine_settings():
    """Validated view of `settings.MJPL`."""
    raw = getattr(settings, "MJPL", {})
    return EngineSettings(**{key.lower(): value for key, value in raw.items()})


def default_glm_control(**overrides):
    engine = get_engine_settings()
    values = dict(
        tol=engine.glm_tol,
        max_iter=engine.glm_max_iter,
        clamp_eps=engine.clamp_eps,
        max_step_halvings=engine.max_step_halvings,
        divergence_guard=engine.ml_divergence_guard,
    )
    values.update({k: v for k, v in overrides.items() if v is not None})
    return GlmControl(**values)


def default_coefficients(**overrides):
    engine = get_engine_settings()
    values = dict(b0=engine.b0, b1=engine.b1, b2=engine.b2, b3=engine.b3, phi=engine.phi)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RescaleCoefficients(**values)
