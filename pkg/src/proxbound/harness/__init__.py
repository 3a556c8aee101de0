from .config import CONFIG_ENV, ExperimentConfig, load_config, parse_flat_config
from .data_types import CSV_COLUMNS, ExperimentResult, ExperimentRow, Rational, approx
from .experiment import (
    ExperimentRunner,
    ExperimentRunnerParams,
    compute_row,
    run_experiment,
)
from .fit import ExponentFit, fit_exponent, fit_points
from .instances import GENERATOR_KINDS, generate_sets
from .output import read_csv, read_ndjson, read_rows, render, write_csv, write_ndjson
from .random_source import SplitMix64
from .run_metrics import PrometheusRunMetrics, RunMetrics

__all__ = [
    "CONFIG_ENV",
    "CSV_COLUMNS",
    "GENERATOR_KINDS",
    "ExperimentConfig",
    "ExperimentResult",
    "ExperimentRow",
    "ExperimentRunner",
    "ExperimentRunnerParams",
    "ExponentFit",
    "PrometheusRunMetrics",
    "Rational",
    "RunMetrics",
    "SplitMix64",
    "approx",
    "compute_row",
    "fit_exponent",
    "fit_points",
    "generate_sets",
    "load_config",
    "parse_flat_config",
    "read_csv",
    "read_ndjson",
    "read_rows",
    "render",
    "write_csv",
    "write_ndjson",
]
