import numpy as np
import pandas as pd

from core.exceptions import DegenerateObservations

from .coefficients import PUBLISHED_COEFFICIENTS
from .scaling import q_factor, r2_test

CELL_KEYS = ["n", "psi", "rho2", "config"]


def summarize_training(records):
    """Per design point means and standard deviations of δ₀ and δ₁."""
    frame = pd.DataFrame(records)
    grouped = frame.groupby("point_id", sort=True)
    summary = grouped.agg(
        kappa=("kappa", "first"),
        gamma=("gamma", "first"),
        rho2=("rho2", "first"),
        exists=("exists", "first"),
        reps=("delta1", "count"),
        delta0=("delta0", "mean"),
        delta1=("delta1", "mean"),
        delta0_sd=("delta0", "std"),
        delta1_sd=("delta1", "std"),
    ).reset_index()
    summary.insert(4, "beta0", summary["gamma"] * np.sqrt(summary["rho2"]))
    summary.insert(5, "gamma0", summary["gamma"] * np.sqrt(1.0 - summary["rho2"]))
    return summary


def r2_test_table(records, b=None):
    """R²_test per (n, ψ, ρ², configuration) cell over non-existence records."""
    b = b or PUBLISHED_COEFFICIENTS
    frame = pd.DataFrame(records)
    frame = frame.loc[~frame["exists"].astype(bool) & (frame["delta1"] > 0)]
    rows = []
    for key, cell in frame.groupby(CELL_KEYS, sort=True):
        gamma0 = cell["gamma"] * np.sqrt(1.0 - cell["rho2"])
        predicted = [
            np.log(q_factor(k, g, g0, b, exists=False))
            for k, g, g0 in zip(cell["kappa"], cell["gamma"], gamma0)
        ]
        try:
            r2 = r2_test(np.log(cell["delta1"].to_numpy()), predicted)
        except DegenerateObservations:
            r2 = np.nan
        rows.append(dict(zip(CELL_KEYS, key), points=len(cell), r2_test=r2))
    return pd.DataFrame(rows, columns=CELL_KEYS + ["points", "r2_test"])


def performance_table(records):
    """
    Fitter cost per (n, κ, γ): mean wall time and the min, mean and max
    iteration counts. `mean_seconds` is blank unless timing was recorded.
    """
    frame = pd.DataFrame(records)
    frame = frame.assign(
        iterations=pd.to_numeric(frame["iterations"], errors="coerce"),
        seconds=pd.to_numeric(frame["seconds"], errors="coerce"),
        converged=frame["status"].astype(str).str.startswith("converged"),
    )
    return frame.groupby(["n", "kappa", "gamma"], sort=True).agg(
        fits=("iterations", "count"),
        converged=("converged", "mean"),
        mean_seconds=("seconds", "mean"),
        min_iterations=("iterations", "min"),
        mean_iterations=("iterations", "mean"),
        max_iterations=("iterations", "max"),
    ).reset_index()


def delta_cell_table(records):
    """Mean and spread of δ₀ and δ₁ per (n, ψ, ρ², configuration) cell, split by existence."""
    frame = pd.DataFrame(records)
    frame = frame.assign(exists=frame["exists"].astype(bool))
    return frame.groupby(CELL_KEYS + ["exists"], sort=True).agg(
        points=("delta1", "count"),
        delta0=("delta0", "mean"),
        delta0_sd=("delta0", "std"),
        delta1=("delta1", "mean"),
        delta1_sd=("delta1", "std"),
    ).reset_index()
