from core.conf import get_engine_settings
from core.datasets import read_dataset
from core.management.common import MjplCommand
from core.management.specs import SeparationSpec
from core.separation import detect_separation


class Command(MjplCommand):
    help = "Check a dataset CSV for complete or quasi-complete separation"
    spec_model = SeparationSpec

    def add_arguments(self, parser):
        parser.add_argument("dataset", nargs="?")
        parser.add_argument("--no-intercept", action="store_false", dest="intercept", default=None)
        parser.add_argument("--spec")

    def run(self, **options):
        spec = self.load_spec(options, dataset=options["dataset"], intercept=options["intercept"])
        data = read_dataset(spec.dataset, has_intercept=spec.intercept)
        verdict = detect_separation(data, get_engine_settings().separation_tol)
        label = "separated" if verdict.separated else "not separated"
        line = f"{label}\toptimum={verdict.optimum:.6g}"
        if verdict.certificate is not None:
            line += "\tdirection=" + ",".join(f"{v:.6g}" for v in verdict.certificate)
        self.stdout.write(line)
