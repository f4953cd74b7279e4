from pathlib import Path

from core.management.common import MjplCommand, metadata_line, write_manifest, write_table
from core.management.specs import TrainSpec
from core.simulation import run_training_experiment, space_filling_design


class Command(MjplCommand):
    help = "Run the training experiment over a space-filling design and write per-replicate and per-point tables"
    spec_model = TrainSpec

    def add_arguments(self, parser):
        parser.add_argument("--points", type=int)
        parser.add_argument("--design-seed", type=int, dest="design_seed")
        parser.add_argument("--n", type=int)
        parser.add_argument("--reps", type=int)
        parser.add_argument("--fit-ml", action="store_true", dest="fit_ml", default=None)
        self.add_common_arguments(parser)

    def run(self, **options):
        fields = ("points", "design_seed", "n", "reps", "fit_ml", "timing", "seed", "out",
                  "tol", "max_iter", "b0", "b1", "b2", "b3", "workers")
        spec = self.load_spec(options, progress=options["progress"] or None,
                              **{key: options[key] for key in fields})
        control = self.glm_control(spec)
        coefficients = self.coefficients(spec)
        design_seed = spec.seed if spec.design_seed is None else spec.design_seed

        design = space_filling_design(spec.points, design_seed)
        tables = run_training_experiment(
            design,
            n=spec.n,
            reps=spec.reps,
            seed=spec.seed,
            workers=self.workers(spec),
            progress=spec.progress,
            control=control,
            coefficients=coefficients,
            fit_ml_when_exists=spec.fit_ml,
            record_timing=spec.timing,
        )

        out = Path(spec.out)
        meta = metadata_line(coefficients, spec.seed, control, design_seed=design_seed)
        write_table(tables.records, out / "records.csv", meta)
        write_table(tables.summary, out / "summary.csv", meta)
        write_manifest(out, "train", spec, coefficients, control, design_seed=design_seed)
        self.stdout.write(self.style.SUCCESS(
            f"Wrote {len(tables.records)} replicates over {len(tables.summary)} points to {out}"
        ))
