"""Command-line interface and measure reports."""

from ._main import build_parser, cmd_ext_werner, cmd_measure, cmd_optimize, cmd_sweep_werner, main
from ._reports import (
    MeasureReport,
    dumps_csv,
    dumps_json,
    ensemble_summary,
    format_number,
    measure_document,
    measure_state,
)

__all__: list[str] = [
    'MeasureReport',
    'build_parser',
    'cmd_ext_werner',
    'cmd_measure',
    'cmd_optimize',
    'cmd_sweep_werner',
    'dumps_csv',
    'dumps_json',
    'ensemble_summary',
    'format_number',
    'main',
    'measure_document',
    'measure_state',
]
