from .linalg import as_matrix, cholesky, hat_diagonals, log_det_spd, weighted_xtwx
from .optimize import nelder_mead
from .quadrature import gauss_hermite, normal_rule
from .regression import simple_linreg

__all__ = [
    "as_matrix",
    "cholesky",
    "gauss_hermite",
    "hat_diagonals",
    "log_det_spd",
    "nelder_mead",
    "normal_rule",
    "simple_linreg",
    "weighted_xtwx",
]
