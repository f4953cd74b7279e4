from .data import FitResult, FitStatus, GlmControl, LogisticData
from .fitters import fit_ml, fit_mjpl
from .gamma import GAMMA_CONTROL, GammaFit, fit_gamma_log
from .logistic import (
    fitted_means,
    jeffreys_penalty,
    log_likelihood,
    penalized_log_likelihood,
    penalized_score,
    score,
)

__all__ = [
    "FitResult",
    "FitStatus",
    "GAMMA_CONTROL",
    "GammaFit",
    "GlmControl",
    "LogisticData",
    "fit_gamma_log",
    "fit_ml",
    "fit_mjpl",
    "fitted_means",
    "jeffreys_penalty",
    "log_likelihood",
    "penalized_log_likelihood",
    "penalized_score",
    "score",
]
