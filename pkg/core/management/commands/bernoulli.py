from pathlib import Path

from core.management.common import MjplCommand, metadata_line, write_manifest, write_table
from core.management.specs import BernoulliSpec
from core.simulation import run_bernoulli_experiment


class Command(MjplCommand):
    help = "Run the Bernoulli-covariate experiment, deciding existence by separation"
    spec_model = BernoulliSpec

    def add_arguments(self, parser):
        parser.add_argument("--kappa", type=float, nargs="+", dest="kappa_grid")
        parser.add_argument("--gamma", type=float, nargs="+", dest="gamma_grid")
        parser.add_argument("--rho2", type=float)
        parser.add_argument("--n", type=int)
        parser.add_argument("--lam", type=float)
        parser.add_argument("--reps", type=int)
        self.add_common_arguments(parser)

    def run(self, **options):
        fields = ("kappa_grid", "gamma_grid", "rho2", "n", "lam", "reps", "timing", "seed", "out",
                  "tol", "max_iter", "b0", "b1", "b2", "b3", "workers")
        spec = self.load_spec(options, progress=options["progress"] or None,
                              **{key: options[key] for key in fields})
        control = self.glm_control(spec)
        coefficients = self.coefficients(spec)

        tables = run_bernoulli_experiment(
            kappa_grid=spec.kappa_grid,
            gamma_grid=spec.gamma_grid,
            rho2=spec.rho2,
            n=spec.n,
            lam=spec.lam,
            config=spec.config,
            reps=spec.reps,
            seed=spec.seed,
            workers=self.workers(spec),
            progress=spec.progress,
            control=control,
            coefficients=coefficients,
            record_timing=spec.timing,
        )

        out = Path(spec.out)
        meta = metadata_line(coefficients, spec.seed, control, lam=spec.lam)
        write_table(tables.records, out / "records.csv", meta)
        write_table(tables.summary, out / "summary.csv", meta)
        write_manifest(out, "bernoulli", spec, coefficients, control)
        separated = int(tables.records["separated"].sum())
        self.stdout.write(self.style.SUCCESS(
            f"{separated} of {len(tables.records)} Bernoulli samples separated; tables in {out}"
        ))
