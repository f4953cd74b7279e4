import logging

import numpy as np
from scipy import linalg as sla

from core.exceptions import DimensionMismatch, NotPositiveDefinite, SingularInformation

logger = logging.getLogger("mjpl")

SYMMETRY_TOL = 1e-10
JITTER = 1e-10


def as_matrix(a, name="matrix"):
    """Coerce to a finite 2-D float64 array with at least one row."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim == 1:
        m = m[:, np.newaxis]
    if m.ndim != 2 or m.shape[0] < 1:
        raise DimensionMismatch(f"{name} must be a non-empty 2-D array; got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


def cholesky(a):
    """
    Lower Cholesky factor of a symmetric positive definite matrix.

    No pivoting. When LAPACK meets a non-positive pivot the factorization is
    retried once on A + JITTER·tr(A)/dim·I; a second failure raises
    NotPositiveDefinite.
    """
    a = as_matrix(a, "A")
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"A must be square; got shape {a.shape}")
    scale = 1.0 + np.max(np.abs(a))
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL * scale:
        raise NotPositiveDefinite("A is not symmetric")

    try:
        return sla.cholesky(a, lower=True, check_finite=False)
    except sla.LinAlgError:
        pass

    dim = a.shape[0]
    jitter = JITTER * np.trace(a) / dim
    logger.debug(f"Cholesky failed, retrying with jitter {jitter:.3e}")
    if jitter <= 0:
        raise NotPositiveDefinite(f"non-positive pivot and trace {np.trace(a):.3e}")
    try:
        return sla.cholesky(a + jitter * np.eye(dim), lower=True, check_finite=False)
    except sla.LinAlgError as e:
        raise NotPositiveDefinite(f"non-positive pivot after jitter {jitter:.3e}: {e}") from e


def log_det_spd(a):
    """log|A| through the Cholesky factor."""
    factor = cholesky(a)
    return 2.0 * np.sum(np.log(np.diag(factor)))


def weighted_xtwx(x_bar, w):
    """Σᵢ wᵢ x̄ᵢ x̄ᵢᵀ."""
    x_bar = np.asarray(x_bar, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != x_bar.shape[0]:
        raise DimensionMismatch(
            f"weights have length {w.size}, design has {x_bar.shape[0]} rows"
        )
    xtwx = (x_bar * w[:, np.newaxis]).T @ x_bar
    return 0.5 * (xtwx + xtwx.T)


def hat_diagonals(x_bar, w):
    """
    Diagonal of W^{1/2} X̄ (X̄ᵀWX̄)⁻¹ X̄ᵀ W^{1/2}.

    Raises SingularInformation when X̄ᵀWX̄ cannot be factorized.
    """
    x_bar = np.asarray(x_bar, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    try:
        factor = cholesky(weighted_xtwx(x_bar, w))
    except NotPositiveDefinite as e:
        raise SingularInformation(str(e)) from e
    root_wx = x_bar * np.sqrt(w)[:, np.newaxis]
    b = sla.solve_triangular(factor, root_wx.T, lower=True, check_finite=False)
    return np.einsum("ij,ij->j", b, b)
