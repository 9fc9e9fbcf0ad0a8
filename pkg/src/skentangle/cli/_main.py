"""Command-line interface of `skentangle`.

Exit codes are 0 on success, 2 on unparsable arguments, state files or weights and 3 on
states that fail validation.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..closedform import ext_werner_report, werner_mre
from ..decomp import OptimizerConfig, mre_of_decomposition, optimize_mre, werner_ensemble
from ..exceptions import StateValidationError
from ..measures import ef_wootters, ppt_separable
from ..states import ExtWernerParams, ext_werner, load_state, werner
from ._reports import (
    MEASURE_COLUMNS,
    SWEEP_COLUMNS,
    dumps_csv,
    dumps_json,
    ext_werner_document,
    format_number,
    measure_document,
    measure_state,
    optimization_document,
)

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_INVALID_STATE = 3
GRID_TOL = 1e-9


class UsageError(ValueError):
    """Raised when command arguments are out of range."""


def _options_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--format', choices=('json', 'csv'), default=None, help='Output format.')
    parser.add_argument('--seed', type=int, default=0, help='Seed of the random restarts.')
    parser.add_argument('--restarts', type=int, default=32, help='Number of random restarts.')
    parser.add_argument('--iters', type=int, default=2000, help='Maximum iterations per local search.')
    parser.add_argument('--ensemble-size', type=int, default=None, help='Maximum ensemble size.')
    parser.add_argument('--no-optimize', action='store_true', help='Report the best seed ensemble only.')
    parser.add_argument('--re-bound', action='store_true', help='Compute the relative entropy upper bound.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Increase the logging verbosity.')
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Parser of the `skentangle` command."""
    options = _options_parser()
    parser = argparse.ArgumentParser(
        prog='skentangle',
        description='Entanglement measures of two-qubit states.',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    commands = parser.add_subparsers(dest='command', required=True)
    measure = commands.add_parser('measure', parents=[options], help='Measures of a state file.')
    measure.add_argument('path', help='JSON state file.')
    sweep = commands.add_parser('sweep-werner', parents=[options], help='Werner states on a grid of F.')
    sweep.add_argument('--from', dest='F_from', type=float, default=0.0, help='First singlet weight.')
    sweep.add_argument('--to', dest='F_to', type=float, default=1.0, help='Last singlet weight.')
    sweep.add_argument('--step', type=float, default=0.05, help='Grid step.')
    ext = commands.add_parser('ext-werner', parents=[options], help='Measures of an extended Werner state.')
    ext.add_argument('--b', nargs=4, type=float, required=True, metavar='B', help='Bell weights.')
    ext.add_argument('--c', nargs=4, type=float, required=True, metavar='C', help='Product weights.')
    optimize = commands.add_parser('optimize', parents=[options], help='Ensemble search of a state file.')
    optimize.add_argument('path', help='JSON state file.')
    return parser


def _config(args: argparse.Namespace) -> OptimizerConfig:
    return OptimizerConfig(
        restarts=args.restarts,
        max_iter=args.iters,
        ensemble_size=args.ensemble_size,
        seed=args.seed,
    )


def _grid(F_from: float, F_to: float, step: float) -> list[float]:
    if not 0.0 <= F_from <= F_to <= 1.0:
        error_msg = f'Range should satisfy 0 <= from <= to <= 1. Got from={F_from} and to={F_to} instead.'
        raise UsageError(error_msg)
    if step <= 0:
        error_msg = f'Step should be positive. Got {step} instead.'
        raise UsageError(error_msg)
    size = int(np.floor((F_to - F_from) / step + GRID_TOL)) + 1
    return [min(round(F_from + index * step, 12), F_to) for index in range(size)]


def cmd_measure(args: argparse.Namespace) -> str:
    """Measure report of a state file."""
    report = measure_state(load_state(args.path), _config(args), optimize=not args.no_optimize, re_bound=args.re_bound)
    if args.format == 'csv':
        return dumps_csv('measure', MEASURE_COLUMNS, [measure_document(report)])
    return dumps_json(measure_document(report))


def _json_row(row: dict[str, Any]) -> dict[str, Any]:
    return {key: value if isinstance(value, bool) else format_number(value) for key, value in row.items()}


def cmd_sweep_werner(args: argparse.Namespace) -> str:
    """Closed-form and pipeline values of Werner states on a grid."""
    rows: list[dict[str, Any]] = []
    for F in _grid(args.F_from, args.F_to, args.step):
        rho = werner(F)
        rows.append(
            {
                'F': F,
                'mre_closed': werner_mre(F),
                'mre_pipeline': mre_of_decomposition(rho, werner_ensemble(F))[0],
                'ef_wootters': ef_wootters(rho)[1],
                'ppt': ppt_separable(rho),
            },
        )
        logger.info('Swept the Werner state with F=%.12g.', F)
    if args.format == 'json':
        return dumps_json([_json_row(row) for row in rows])
    return dumps_csv('werner-sweep', SWEEP_COLUMNS, rows)


def cmd_ext_werner(args: argparse.Namespace) -> str:
    """Closed-form and pipeline values of an extended Werner state."""
    params = ExtWernerParams(b=args.b, c=args.c)
    report = measure_state(ext_werner(params), _config(args), optimize=not args.no_optimize, re_bound=args.re_bound)
    if args.format == 'csv':
        return dumps_csv('measure', MEASURE_COLUMNS, [measure_document(report)])
    return dumps_json({'closed_form': ext_werner_document(ext_werner_report(params)), **measure_document(report)})


def cmd_optimize(args: argparse.Namespace) -> str:
    """Ensemble search of a state file."""
    state = load_state(args.path)
    return dumps_json(optimization_document(optimize_mre(state, _config(args)), state))


COMMANDS = {
    'measure': cmd_measure,
    'sweep-werner': cmd_sweep_werner,
    'ext-werner': cmd_ext_werner,
    'optimize': cmd_optimize,
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Sequence[str] | None = None) -> int:
    """Run the `skentangle` command.

    Args:
        argv:
            The command arguments. If `None`, the arguments of the process are used.

    Returns:
        exit_code:
            The exit code of the command.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return int(error.code or 0)
    _configure_logging(args.verbose)
    try:
        output = COMMANDS[args.command](args)
    except StateValidationError as error:
        sys.stderr.write(f'skentangle: invalid state: {error}\n')
        return EXIT_INVALID_STATE
    except ValueError as error:
        sys.stderr.write(f'skentangle: error: {error}\n')
        return EXIT_USAGE
    sys.stdout.write(output)
    return 0
