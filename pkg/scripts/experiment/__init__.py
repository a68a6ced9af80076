from experiment.config import ExperimentConfig, LabConfig, load_config
from experiment.runner import run_experiment, run_rate_table, rows_to_frame
from experiment.schemas import ExperimentRow, RateRow

__all__ = [
    "ExperimentConfig",
    "ExperimentRow",
    "LabConfig",
    "RateRow",
    "load_config",
    "rows_to_frame",
    "run_experiment",
    "run_rate_table",
]
