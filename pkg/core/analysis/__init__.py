from .bootstrap import bca_endpoints, bootstrap_bca, jackknife_acceleration
from .coefficients import (
    PUBLISHED_COEFFICIENTS,
    BcaInterval,
    PowerLawFit,
    RescaleCoefficients,
)
from .powerlaw import (
    fit_power_law,
    fit_power_law_ols,
    power_law_design,
    power_law_statistic,
    select_training_points,
)
from .scaling import (
    aggregate_bias,
    aggregate_mse,
    q_factor,
    r2_test,
    rescale_estimates,
)
from .summaries import delta_cell_table, performance_table, r2_test_table, summarize_training

__all__ = [
    "PUBLISHED_COEFFICIENTS",
    "BcaInterval",
    "PowerLawFit",
    "RescaleCoefficients",
    "aggregate_bias",
    "aggregate_mse",
    "bca_endpoints",
    "bootstrap_bca",
    "delta_cell_table",
    "fit_power_law",
    "fit_power_law_ols",
    "jackknife_acceleration",
    "performance_table",
    "power_law_design",
    "power_law_statistic",
    "q_factor",
    "r2_test",
    "r2_test_table",
    "rescale_estimates",
    "select_training_points",
    "summarize_training",
]
