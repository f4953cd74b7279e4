"""
Django settings for the mJPL rescaling toolkit.

The project has no database and no web surface; Django hosts the `core`
app so its management commands form the command-line front end.

Every numerical default below can be overridden from the environment or a
`.env` file at the project root.
"""

from pathlib import Path
import os

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")

SECRET_KEY = os.environ.get("MJPL_SECRET_KEY", "mjpl-local-only-not-a-secret")

DEBUG = os.environ.get("MJPL_DEBUG", "false").lower() == "true"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'core',
]

# Commands only; nothing is persisted.
DATABASES = {}

USE_TZ = True

TIME_ZONE = 'UTC'


# Engine defaults
# b and phi default to the published power-law fit.

MJPL = {
    "GLM_TOL": float(os.environ.get("MJPL_GLM_TOL", "1e-3")),
    "GLM_MAX_ITER": int(os.environ.get("MJPL_GLM_MAX_ITER", "300")),
    "CLAMP_EPS": float(os.environ.get("MJPL_CLAMP_EPS", "1e-10")),
    "MAX_STEP_HALVINGS": int(os.environ.get("MJPL_MAX_STEP_HALVINGS", "10")),
    "ML_DIVERGENCE_GUARD": float(os.environ.get("MJPL_ML_DIVERGENCE_GUARD", "1e4")),
    "QUAD_NODES": int(os.environ.get("MJPL_QUAD_NODES", "60")),
    "SEPARATION_TOL": float(os.environ.get("MJPL_SEPARATION_TOL", "1e-7")),
    "WORKERS": int(os.environ.get("MJPL_WORKERS", "1")),
    "BOOTSTRAP_SAMPLES": int(os.environ.get("MJPL_BOOTSTRAP_SAMPLES", "9999")),
    "B0": float(os.environ.get("MJPL_B0", "-0.033")),
    "B1": float(os.environ.get("MJPL_B1", "-1.172")),
    "B2": float(os.environ.get("MJPL_B2", "-1.869")),
    "B3": float(os.environ.get("MJPL_B3", "0.817")),
    "PHI": float(os.environ.get("MJPL_PHI", "0.004")),
}


# Logging Configuration

LOG_FILE = Path(os.environ.get("MJPL_LOG_FILE", BASE_DIR / "logs" / "mjpl.log"))
LOG_FILE.parent.mkdir(parents=True, exist_ok=True)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '-> {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': os.environ.get("MJPL_LOG_LEVEL", "INFO"),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'DEBUG',
            'class': 'logging.FileHandler',
            'filename': LOG_FILE,
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'mjpl': {
            'handlers': ['console', 'file'],
            'level': 'DEBUG',
            'propagate': False,
        },
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True,
        },
    },
}
