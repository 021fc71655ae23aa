"""
Report module: experiment configs, sweep execution, tables and plots.
"""

from .config_file import (
    ExperimentCell,
    ExperimentConfig,
    ReportError,
    SweepAxis,
    check_pairing,
    emit_experiment,
    load_dataset_spec,
    load_experiment,
    parse_dataset_spec,
    parse_experiment,
)
from .experiment import (
    COLUMNS,
    ExperimentReport,
    ReportRow,
    ReportWriter,
    load_report,
    run_cell,
    run_cells,
    run_experiment,
)
from .plot import emit_shade_plot
from .tables import TableFormat, emit_table

__all__ = [
    "COLUMNS",
    "ExperimentCell",
    "ExperimentConfig",
    "ExperimentReport",
    "ReportError",
    "ReportRow",
    "ReportWriter",
    "SweepAxis",
    "TableFormat",
    "check_pairing",
    "emit_experiment",
    "emit_shade_plot",
    "emit_table",
    "load_dataset_spec",
    "load_experiment",
    "load_report",
    "parse_dataset_spec",
    "parse_experiment",
    "run_cell",
    "run_cells",
    "run_experiment",
]
