import math

from core.analysis import q_factor, rescale_estimates
from core.conf import get_engine_settings
from core.management.common import MjplCommand, metadata_line, read_table, write_table
from core.management.specs import RescaleSpec
from core.phase import h_mle


class Command(MjplCommand):
    help = "Divide fitted slope coefficients by the scaling factor q(kappa, gamma, gamma0)"
    spec_model = RescaleSpec

    def add_arguments(self, parser):
        parser.add_argument("coefficients", nargs="?", help="coefficient CSV written by the fit command")
        parser.add_argument("--kappa", type=float)
        parser.add_argument("--gamma", type=float)
        parser.add_argument("--rho2", type=float)
        existence = parser.add_mutually_exclusive_group()
        existence.add_argument("--exists", action="store_true", dest="exists", default=None)
        existence.add_argument("--not-exists", action="store_false", dest="exists")
        self.add_common_arguments(parser, experiment=False)

    def run(self, **options):
        fields = ("coefficients", "kappa", "gamma", "rho2", "exists", "out", "b0", "b1", "b2", "b3")
        spec = self.load_spec(options, **{key: options[key] for key in fields})
        coefficients = self.coefficients(spec)
        beta0 = spec.gamma * math.sqrt(spec.rho2)
        gamma0 = spec.gamma * math.sqrt(1.0 - spec.rho2)
        exists = spec.exists
        if exists is None:
            exists = spec.kappa < h_mle(beta0, gamma0, get_engine_settings().quad_nodes)

        q = q_factor(spec.kappa, spec.gamma, gamma0, coefficients, exists)
        table = read_table(spec.coefficients, required=["term", "estimate"])
        slopes = table["term"] != "(intercept)"
        table.loc[slopes, "estimate"] = rescale_estimates(table.loc[slopes, "estimate"], q)

        meta = metadata_line(coefficients, q=f"{q:.10g}", exists=exists)
        write_table(table, spec.out or self.stdout, meta)
