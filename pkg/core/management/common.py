import json
import logging
import sys
from pathlib import Path

import numpy as np
import pandas as pd
import scipy
import statsmodels
from django.core.management.base import BaseCommand, CommandError
from pydantic import ValidationError

import core
from core.conf import default_coefficients, default_glm_control, get_engine_settings
from core.exceptions import DatasetParseError, MjplError

logger = logging.getLogger("mjpl")

NON_CONVERGENCE = 2


class NotConverged(Exception):
    pass


def metadata_line(coefficients=None, seed=None, control=None, **extra):
    """One `#` line echoing the constants an output was produced with."""
    parts = []
    if coefficients is not None:
        parts.append(coefficients.echo())
    if seed is not None:
        parts.append(f"seed={seed}")
    if control is not None:
        parts.append(f"tol={control.tol:g} max_iter={control.max_iter}")
    parts.extend(f"{key}={value}" for key, value in extra.items())
    return "# " + " ".join(parts)


def write_table(frame, target, meta=None):
    """CSV with an optional leading metadata line; `target` may be a stream."""
    text = frame.to_csv(index=False, lineterminator="\n", na_rep="")
    if meta:
        text = meta + "\n" + text
    if hasattr(target, "write"):
        target.write(text)
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def read_table(path, required=()):
    frame = pd.read_csv(path, comment="#")
    missing = [column for column in required if column not in frame.columns]
    if missing:
        raise DatasetParseError(f"{path}: missing columns {', '.join(missing)}")
    return frame


def versions():
    return {
        "mjpl": core.__version__,
        "numpy": np.__version__,
        "pandas": pd.__version__,
        "python": ".".join(str(v) for v in sys.version_info[:3]),
        "scipy": scipy.__version__,
        "statsmodels": statsmodels.__version__,
    }


def write_manifest(out_dir, command, spec, coefficients=None, control=None, **extra):
    payload = {
        "command": command,
        "spec": spec.model_dump(mode="json", exclude={"out", "progress", "workers"}),
        "versions": versions(),
    }
    if coefficients is not None:
        payload["coefficients"] = coefficients.model_dump()
    if control is not None:
        payload["glm_control"] = control.model_dump()
    payload.update(extra)
    path = Path(out_dir) / "manifest.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


class MjplCommand(BaseCommand):
    """
    Base for the toolkit's commands. Subclasses implement `run(**options)`;
    toolkit, validation and I/O errors surface as CommandError with exit
    code 1, non-convergence with exit code 2.
    """

    spec_model = None

    def add_common_arguments(self, parser, experiment=True):
        parser.add_argument("--spec", help="JSON file with the command's parameters")
        parser.add_argument("--seed", type=int)
        parser.add_argument("--out", help="output file or directory")
        parser.add_argument("--tol", type=float)
        parser.add_argument("--max-iter", type=int, dest="max_iter")
        for name in ("b0", "b1", "b2", "b3"):
            parser.add_argument(f"--{name}", type=float)
        if experiment:
            parser.add_argument("--workers", type=int)
            parser.add_argument("--progress", action="store_true", help="show progress bars on stderr")
            parser.add_argument("--timing", action="store_true", default=None, help="fill the seconds column")

    def load_spec(self, options, **fields):
        """
        Merge the `--spec` JSON document with explicit flags (flags win) and
        validate it against `spec_model`.
        """
        values = {}
        if options.get("spec"):
            path = Path(options["spec"])
            try:
                values = json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as e:
                raise CommandError(f"{path}: not valid JSON ({e})")
            if not isinstance(values, dict):
                raise CommandError(f"{path}: spec must be a JSON object")
        values.update({k: v for k, v in fields.items() if v is not None})
        return self.spec_model.model_validate(values)

    def glm_control(self, spec):
        return default_glm_control(tol=spec.tol, max_iter=spec.max_iter)

    def coefficients(self, spec):
        return default_coefficients(b0=spec.b0, b1=spec.b1, b2=spec.b2, b3=spec.b3)

    def workers(self, spec):
        return spec.workers or get_engine_settings().workers

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except NotConverged as e:
            raise CommandError(str(e), returncode=NON_CONVERGENCE)
        except ValidationError as e:
            raise CommandError(f"invalid parameters:\n{e}")
        except KeyError as e:
            logger.error(f"{self.command_name} failed: missing column {e}")
            raise CommandError(f"missing column {e}")
        except (MjplError, ValueError, OSError) as e:
            logger.error(f"{self.command_name} failed: {e}")
            raise CommandError(str(e))

    @property
    def command_name(self):
        return self.__class__.__module__.rsplit(".", 1)[-1]

    def run(self, **options):
        raise NotImplementedError
