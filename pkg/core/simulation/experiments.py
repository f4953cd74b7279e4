import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from core.analysis import summarize_training

from .config import (
    RECORD_COLUMNS,
    TEST_POINTS,
    BetaStarConfig,
    CovariateFamily,
    SimConfig,
)
from .datagen import generate_amse_dataset
from .replication import run_replication

logger = logging.getLogger("mjpl")

BERNOULLI_KAPPAS = (0.05, 0.1, 0.3, 0.5, 0.7)
BERNOULLI_GAMMAS = (2.0, 4.0, 8.0, 12.0, 16.0, 20.0)
AMSE_KAPPAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)
AMSE_GAMMAS = (1.0, 2.5, 5.0, 7.5, 10.0, 12.5, 15.0)


@dataclass
class ExperimentTables:
    records: pd.DataFrame
    summary: Optional[pd.DataFrame] = None


def records_frame(records):
    return pd.DataFrame([r.row() for r in records], columns=RECORD_COLUMNS)


def run_ordered(configs, workers=1, progress=False, desc="replicates", **options):
    """
    Run `run_replication` over `configs`, returning records in input order
    whatever the number of worker processes.
    """
    task = partial(run_replication, **options)
    if workers <= 1:
        return [task(cfg) for cfg in tqdm(configs, desc=desc, disable=not progress)]
    chunksize = max(1, len(configs) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(task, configs, chunksize=chunksize)
        return list(tqdm(results, total=len(configs), desc=desc, disable=not progress))


def run_training_experiment(design, n=2000, reps=100, seed=0, workers=1, progress=False, **options):
    """
    Replicate every (κ, γ, ρ²) design point `reps` times with train-grid
    coefficients and independent normal covariates. The summary holds the
    per-point means of δ₀ and δ₁ with the existence flag.
    """
    design = list(design)
    if not design:
        raise ValueError("training design is empty")
    configs = [
        SimConfig(n=n, kappa=kappa, gamma=gamma, rho2=rho2, seed=seed, point_id=i, replicate=r)
        for i, (kappa, gamma, rho2) in enumerate(design)
        for r in range(reps)
    ]
    logger.info(f"Training experiment: {len(design)} points x {reps} replicates, n={n}")
    records = records_frame(run_ordered(configs, workers, progress, desc="train", **options))
    return ExperimentTables(records=records, summary=summarize_training(records))


def run_test_experiment(
    n_values=(2000,),
    psi_values=(0.0,),
    rho2_values=(0.0,),
    configs=tuple(c.value for c in BetaStarConfig if c is not BetaStarConfig.TRAIN_GRID),
    points=TEST_POINTS,
    seed=0,
    reps=1,
    workers=1,
    progress=False,
    **options,
):
    """One replicate per (κ, γ) test point in every (n, ψ, ρ², config) cell."""
    points = list(points)
    cells = list(itertools.product(n_values, psi_values, rho2_values, configs))
    sims = [
        SimConfig(
            n=n,
            kappa=kappa,
            gamma=gamma,
            rho2=rho2,
            psi=psi,
            beta_star_config=config,
            seed=seed,
            point_id=c * len(points) + j,
            replicate=r,
        )
        for c, (n, psi, rho2, config) in enumerate(cells)
        for j, (kappa, gamma) in enumerate(points)
        for r in range(reps)
    ]
    logger.info(f"Test experiment: {len(cells)} cells x {len(points)} points")
    return ExperimentTables(records=records_frame(run_ordered(sims, workers, progress, desc="test", **options)))


def run_amse_experiment(
    kappa_grid=AMSE_KAPPAS,
    gamma_grid=AMSE_GAMMAS,
    n=2000,
    reps=50,
    seed=0,
    workers=1,
    progress=False,
    **options,
):
    """
    Aggregate MSE of rescaled mJPL estimates in the no-intercept design.
    The summary has, per (κ, γ) cell, the mean aMSE and its standard error.
    """
    cells = list(itertools.product(kappa_grid, gamma_grid))
    sims = [
        SimConfig(
            n=n,
            kappa=kappa,
            gamma=gamma,
            beta_star_config=BetaStarConfig.S1,
            has_intercept=False,
            seed=seed,
            point_id=i,
            replicate=r,
        )
        for i, (kappa, gamma) in enumerate(cells)
        for r in range(reps)
    ]
    logger.info(f"aMSE experiment: {len(cells)} cells x {reps} replicates, n={n}")
    records = records_frame(
        run_ordered(sims, workers, progress, desc="amse", generator=generate_amse_dataset, **options)
    )
    grouped = records.groupby("point_id", sort=True)
    summary = grouped.agg(
        kappa=("kappa", "first"),
        gamma=("gamma", "first"),
        p=("p", "first"),
        exists=("exists", "first"),
        q=("q", "first"),
        reps=("agg_mse", "count"),
        amse=("agg_mse", "mean"),
        amse_sd=("agg_mse", "std"),
        agg_bias=("agg_bias", "mean"),
    ).reset_index()
    summary["amse_se"] = summary["amse_sd"] / np.sqrt(summary["reps"])
    return ExperimentTables(records=records, summary=summary.drop(columns="amse_sd"))


def run_bernoulli_experiment(
    kappa_grid=BERNOULLI_KAPPAS,
    gamma_grid=BERNOULLI_GAMMAS,
    rho2=0.3,
    n=2000,
    lam=0.1,
    config=BetaStarConfig.S1,
    reps=1,
    seed=0,
    workers=1,
    progress=False,
    **options,
):
    """Bernoulli(λ) covariates; existence is read off each sample's separation."""
    cells = list(itertools.product(kappa_grid, gamma_grid))
    sims = [
        SimConfig(
            n=n,
            kappa=kappa,
            gamma=gamma,
            rho2=rho2,
            beta_star_config=config,
            covariate_family=CovariateFamily.BERNOULLI,
            bernoulli_prob=lam,
            seed=seed,
            point_id=i,
            replicate=r,
        )
        for i, (kappa, gamma) in enumerate(cells)
        for r in range(reps)
    ]
    logger.info(f"Bernoulli experiment: {len(cells)} cells, lambda={lam}, n={n}")
    records = records_frame(run_ordered(sims, workers, progress, desc="bernoulli", **options))
    return ExperimentTables(records=records, summary=summarize_training(records))
