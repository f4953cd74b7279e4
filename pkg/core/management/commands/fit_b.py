from pathlib import Path

import pandas as pd

from core.analysis import (
    bootstrap_bca,
    fit_power_law,
    fit_power_law_ols,
    power_law_statistic,
    select_training_points,
)
from core.conf import get_engine_settings
from core.management.common import MjplCommand, metadata_line, read_table, write_manifest, write_table
from core.management.specs import FitBSpec

TERMS = ["b0", "b1", "b2", "b3"]
TRAINING_COLUMNS = ["kappa", "gamma", "gamma0", "delta1", "exists"]


class Command(MjplCommand):
    help = "Fit the power law for delta1 from a training summary and bootstrap BCa intervals"
    spec_model = FitBSpec

    def add_arguments(self, parser):
        parser.add_argument("training", nargs="?", help="summary.csv written by the train command")
        parser.add_argument("--rho2-cutoff", type=float, dest="rho2_cutoff")
        parser.add_argument("--bootstrap", type=int, help="resamples; 0 skips the intervals")
        parser.add_argument("--level", type=float)
        parser.add_argument("--spec")
        parser.add_argument("--seed", type=int)
        parser.add_argument("--out")
        parser.add_argument("--progress", action="store_true")

    def run(self, **options):
        fields = ("training", "rho2_cutoff", "bootstrap", "level", "seed", "out")
        spec = self.load_spec(options, **{key: options[key] for key in fields})
        points = read_table(spec.training, required=TRAINING_COLUMNS)

        fit = fit_power_law(points, spec.rho2_cutoff)
        ols = fit_power_law_ols(points, spec.rho2_cutoff)
        b = fit.coefficients
        table = pd.DataFrame({
            "term": TERMS,
            "estimate": [b.b0, b.b1, b.b2, b.b3],
            "ols_estimate": list(ols.coefficients.as_tuple()),
        })

        resamples = get_engine_settings().bootstrap_samples if spec.bootstrap is None else spec.bootstrap
        if resamples:
            selected = select_training_points(points, spec.rho2_cutoff).reset_index(drop=True)
            intervals = bootstrap_bca(
                selected, power_law_statistic, B=resamples, level=spec.level,
                seed=spec.seed, progress=options["progress"],
            )
            table["lower"] = [i.lower for i in intervals]
            table["upper"] = [i.upper for i in intervals]
            table["resamples"] = [i.resamples for i in intervals]

        meta = metadata_line(
            b, spec.seed, points=fit.n_points, deviance_explained=f"{fit.deviance_explained:.6f}",
            ols_r2=f"{ols.deviance_explained:.6f}", level=spec.level, bootstrap=resamples,
        )
        if spec.out:
            out = Path(spec.out)
            write_table(table, out / "coefficients.csv", meta)
            write_manifest(out, "fit_b", spec, b, deviance_explained=fit.deviance_explained)
        else:
            write_table(table, self.stdout, meta)
