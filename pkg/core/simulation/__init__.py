from .config import (
    RECORD_COLUMNS,
    TEST_POINTS,
    BetaStarConfig,
    CovariateFamily,
    GeneratedSample,
    ReplicationRecord,
    SimConfig,
)
from .datagen import (
    ar1_covariance,
    generate_amse_dataset,
    generate_dataset,
    generate_phase_dataset,
    make_beta_star,
    space_filling_design,
)
from .experiments import (
    ExperimentTables,
    records_frame,
    run_amse_experiment,
    run_bernoulli_experiment,
    run_ordered,
    run_test_experiment,
    run_training_experiment,
)
from .replication import run_replication
from .streams import replicate_rng

__all__ = [
    "RECORD_COLUMNS",
    "TEST_POINTS",
    "BetaStarConfig",
    "CovariateFamily",
    "ExperimentTables",
    "GeneratedSample",
    "ReplicationRecord",
    "SimConfig",
    "ar1_covariance",
    "generate_amse_dataset",
    "generate_dataset",
    "generate_phase_dataset",
    "make_beta_star",
    "records_frame",
    "replicate_rng",
    "run_amse_experiment",
    "run_bernoulli_experiment",
    "run_ordered",
    "run_replication",
    "run_test_experiment",
    "run_training_experiment",
    "space_filling_design",
]
