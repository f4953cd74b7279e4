from .detect import SEPARATION_TOL, SeparationVerdict, detect_separation
from .lp import LinearProgram, LpResult, LpStatus, simplex_solve

__all__ = [
    "LinearProgram",
    "LpResult",
    "LpStatus",
    "SEPARATION_TOL",
    "SeparationVerdict",
    "detect_separation",
    "simplex_solve",
]
