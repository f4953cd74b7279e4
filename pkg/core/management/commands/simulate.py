import pandas as pd

from core.datasets import dataset_frame
from core.management.common import MjplCommand, metadata_line, write_table
from core.management.specs import SimulateSpec
from core.simulation import SimConfig, generate_dataset


class Command(MjplCommand):
    help = "Simulate one logistic-regression dataset and write it as CSV"
    spec_model = SimulateSpec

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--kappa", type=float)
        parser.add_argument("--gamma", type=float)
        parser.add_argument("--rho2", type=float)
        parser.add_argument("--psi", type=float)
        parser.add_argument("--config")
        parser.add_argument("--family")
        parser.add_argument("--lam", type=float)
        parser.add_argument("--replicate", type=int)
        parser.add_argument("--no-intercept", action="store_false", dest="intercept", default=None)
        parser.add_argument("--truth", help="also write the true coefficients to this CSV")
        self.add_common_arguments(parser, experiment=False)

    def run(self, **options):
        fields = ("n", "kappa", "gamma", "rho2", "psi", "config", "family", "lam",
                  "replicate", "intercept", "truth", "seed", "out")
        spec = self.load_spec(options, **{key: options[key] for key in fields})
        cfg = SimConfig(
            n=spec.n,
            kappa=spec.kappa,
            gamma=spec.gamma,
            rho2=spec.rho2,
            psi=spec.psi,
            beta_star_config=spec.config,
            covariate_family=spec.family,
            bernoulli_prob=spec.lam,
            seed=spec.seed,
            replicate=spec.replicate,
            has_intercept=spec.intercept,
        )
        sample = generate_dataset(cfg)
        meta = metadata_line(
            seed=spec.seed,
            replicate=spec.replicate,
            config=cfg.beta_star_config.value,
            family=cfg.covariate_family.value,
        )
        write_table(dataset_frame(sample.data), spec.out or self.stdout, meta)

        if spec.truth:
            terms = (["(intercept)"] if cfg.has_intercept else []) + [f"x{j}" for j in range(1, cfg.p + 1)]
            values = ([sample.beta0_true] if cfg.has_intercept else []) + list(sample.beta_true)
            write_table(pd.DataFrame({"term": terms, "value": values}), spec.truth, meta)
