from .montecarlo import mc_phase_boundary
from .points import ExistenceMethod, ExistenceVerdict, PhasePoint
from .threshold import DEFAULT_QUAD_NODES, h_mle


def mle_exists_asymptotically(
    point: PhasePoint,
    method=ExistenceMethod.ANALYTIC,
    quad_nodes=DEFAULT_QUAD_NODES,
    n=2000,
    reps=20,
    seed=0,
    intercept=True,
):
    """
    Compare κ with the existence threshold. Ties count as "not exists":
    existence requires κ strictly below the threshold.
    """
    method = ExistenceMethod(method)
    if method is ExistenceMethod.ANALYTIC:
        h = h_mle(point.beta0, point.gamma0, quad_nodes, intercept)
    else:
        h = mc_phase_boundary(point.beta0, point.gamma0, n, reps, seed, intercept)
    return ExistenceVerdict(
        exists_asymptotically=point.kappa < h,
        h_value=h,
        method=method,
    )
