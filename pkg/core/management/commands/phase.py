from core.conf import get_engine_settings
from core.management.common import MjplCommand
from core.management.specs import PhaseSpec
from core.phase import mle_exists_asymptotically


class Command(MjplCommand):
    help = "Classify (kappa, beta0, gamma0) or (kappa, gamma, rho2) as inside or outside the MLE existence region"
    spec_model = PhaseSpec

    def add_arguments(self, parser):
        parser.add_argument("--kappa", type=float)
        parser.add_argument("--beta0", type=float)
        parser.add_argument("--gamma0", type=float)
        parser.add_argument("--gamma", type=float, help="with --rho2, instead of --beta0/--gamma0")
        parser.add_argument("--rho2", type=float)
        parser.add_argument("--method", choices=["analytic", "monte-carlo"])
        parser.add_argument("--quad-nodes", type=int, dest="quad_nodes")
        parser.add_argument("--n", type=int)
        parser.add_argument("--reps", type=int)
        parser.add_argument("--no-intercept", action="store_false", dest="intercept", default=None)
        parser.add_argument("--spec")
        parser.add_argument("--seed", type=int)

    def run(self, **options):
        fields = ("kappa", "beta0", "gamma0", "gamma", "rho2", "method", "quad_nodes", "n", "reps",
                  "intercept", "seed")
        spec = self.load_spec(options, **{key: options[key] for key in fields})
        point = spec.point()
        verdict = mle_exists_asymptotically(
            point,
            method=spec.method,
            quad_nodes=spec.quad_nodes or get_engine_settings().quad_nodes,
            n=spec.n,
            reps=spec.reps,
            seed=spec.seed,
            intercept=spec.intercept,
        )
        self.stdout.write(
            f"{verdict.label}\tkappa={point.kappa:g}\tbeta0={point.beta0:g}\tgamma0={point.gamma0:g}"
            f"\th={verdict.h_value:.6f}\tmethod={verdict.method.value}"
        )
