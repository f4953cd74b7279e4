import numpy as np
from numpy.polynomial.hermite import hermgauss


def gauss_hermite(m):
    """
    Nodes and weights for ∫ e^{-x²} f(x) dx.

    Weights sum to √π. For expectations under N(0, 1) use
    `normal_rule`, which applies the change of variables z = √2 x.
    """
    if m < 1:
        raise ValueError(f"node count must be >= 1; got {m}")
    return hermgauss(m)


def normal_rule(m):
    """Gauss–Hermite rule rescaled so Σ wᵢ f(zᵢ) ≈ E f(Z), Z ~ N(0, 1)."""
    nodes, weights = gauss_hermite(m)
    return nodes * np.sqrt(2.0), weights / np.sqrt(np.pi)
