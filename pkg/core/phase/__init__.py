from .existence import mle_exists_asymptotically
from .montecarlo import mc_phase_boundary, separated_fraction
from .points import ExistenceMethod, ExistenceVerdict, PhasePoint
from .threshold import DEFAULT_QUAD_NODES, h_mle, positive_part_moment

__all__ = [
    "DEFAULT_QUAD_NODES",
    "ExistenceMethod",
    "ExistenceVerdict",
    "PhasePoint",
    "h_mle",
    "mc_phase_boundary",
    "mle_exists_asymptotically",
    "positive_part_moment",
    "separated_fraction",
]
