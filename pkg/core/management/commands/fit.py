import pandas as pd

from core.datasets import read_dataset
from core.glm import fit_ml, fit_mjpl
from core.management.common import MjplCommand, NotConverged, metadata_line, write_table
from core.management.specs import FitSpec

FITTERS = {"mjpl": fit_mjpl, "ml": fit_ml}


class Command(MjplCommand):
    help = "Fit a logistic regression to a dataset CSV by mJPL or ML and write the coefficients"
    spec_model = FitSpec

    def add_arguments(self, parser):
        parser.add_argument("dataset", nargs="?", help="CSV with columns y,x1..xp")
        parser.add_argument("--method", choices=sorted(FITTERS))
        parser.add_argument("--no-intercept", action="store_false", dest="intercept", default=None)
        self.add_common_arguments(parser, experiment=False)

    def run(self, **options):
        spec = self.load_spec(
            options,
            dataset=options["dataset"],
            method=options["method"],
            intercept=options["intercept"],
            out=options["out"],
            tol=options["tol"],
            max_iter=options["max_iter"],
        )
        control = self.glm_control(spec)
        data = read_dataset(spec.dataset, has_intercept=spec.intercept)
        result = FITTERS[spec.method](data, control)

        terms = (["(intercept)"] if data.has_intercept else []) + [f"x{j}" for j in range(1, data.p + 1)]
        table = pd.DataFrame({"term": terms, "estimate": result.theta})
        meta = metadata_line(control=control, method=spec.method, status=result.status.value)
        write_table(table, spec.out or self.stdout, meta)

        summary = (
            f"{spec.method}: {result.status.value} after {result.iterations} iterations, "
            f"score norm {result.score_norm:.3e}"
        )
        if not result.converged:
            raise NotConverged(summary)
        self.stderr.write(self.style.SUCCESS(summary))
