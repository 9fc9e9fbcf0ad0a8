"""Measure reports and their serialization."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import csv
import io
import json
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from ..closedform import ExtWernerReport
from ..decomp import (
    Decomposition,
    OptimizerConfig,
    OptResult,
    mre_of_ensemble,
    optimize_mre,
    re_upper_bound,
    seed_ensembles,
)
from ..measures import ef_wootters, ppt_separable, von_neumann_entropy
from ..states import DensityMatrix, PureState, as_density, state_document

SIGNIFICANT_DIGITS = 12
CSV_VERSION = 'v1'
MEASURE_COLUMNS = (
    'entropy',
    'concurrence',
    'ef_wootters',
    'mre_seed',
    'mre_optimized',
    're_upper',
    'ppt_separable',
)
SWEEP_COLUMNS = ('F', 'mre_closed', 'mre_pipeline', 'ef_wootters', 'ppt')


@dataclass(frozen=True, eq=False)
class MeasureReport:
    """Measures of one two-qubit state."""

    entropy: float
    concurrence: float
    ef_wootters: float
    mre_seed: float
    mre_optimized: float
    re_upper: float | None
    ppt_separable: bool
    ensemble_used: dict[str, Any]


def format_number(value: float) -> float | str:
    """Number rounded to 12 significant digits, with infinity as the string `'inf'`."""
    if np.isposinf(value):
        return 'inf'
    return float(f'{value:.{SIGNIFICANT_DIGITS}g}')


def format_cell(value: float | bool | None) -> str:
    """CSV cell of a number, a boolean or a missing value."""
    if value is None:
        return ''
    if isinstance(value, bool | np.bool_):
        return 'true' if value else 'false'
    if np.isposinf(value):
        return 'inf'
    return f'{value:.{SIGNIFICANT_DIGITS}g}'


def _format_values(values: npt.ArrayLike) -> list[float | str]:
    return [format_number(value) for value in np.asarray(values, dtype=float).tolist()]


def ensemble_summary(label: str, decomposition: Decomposition) -> dict[str, Any]:
    """JSON-ready summary of an ensemble."""
    return {
        'start': label,
        'size': len(decomposition),
        'weights': _format_values(decomposition.weights),
        'states': [
            [[format_number(amplitude.real), format_number(amplitude.imag)] for amplitude in state.vector.tolist()]
            for state in decomposition.states
        ],
    }


def measure_state(
    state: DensityMatrix | PureState | npt.ArrayLike,
    cfg: OptimizerConfig | None = None,
    optimize: bool = True,
    re_bound: bool = False,
) -> MeasureReport:
    """Compute the measures of a two-qubit state.

    Args:
        state:
            The two-qubit state.

        cfg:
            The search parameters. If `None`, the default `OptimizerConfig` is used.

        optimize:
            Whether to search the ensembles. Otherwise the best seed ensemble is reported.

        re_bound:
            Whether to compute the upper bound of the relative entropy of entanglement.

    Returns:
        report:
            The measure report.
    """
    rho = as_density(state)
    concurrence, ef = ef_wootters(rho)
    if optimize:
        result = optimize_mre(rho, cfg)
        mre_seed, mre_optimized = result.seed_value, result.best_value
        ensemble = ensemble_summary(result.best_start, result.best_decomposition)
    else:
        seeds, reference = seed_ensembles(rho)
        values = {name: mre_of_ensemble(rho, decomposition)[0] for name, decomposition in seeds}
        best_name, best_decomposition = min(seeds, key=lambda seed: values[seed[0]])
        mre_seed, mre_optimized = values[reference], values[best_name]
        ensemble = ensemble_summary(best_name, best_decomposition)
    return MeasureReport(
        entropy=von_neumann_entropy(rho),
        concurrence=concurrence,
        ef_wootters=ef,
        mre_seed=mre_seed,
        mre_optimized=mre_optimized,
        re_upper=re_upper_bound(rho, cfg) if re_bound else None,
        ppt_separable=ppt_separable(rho),
        ensemble_used=ensemble,
    )


def measure_document(report: MeasureReport) -> dict[str, Any]:
    """JSON-ready document of a measure report."""
    document: dict[str, Any] = {
        'entropy': format_number(report.entropy),
        'concurrence': format_number(report.concurrence),
        'ef_wootters': format_number(report.ef_wootters),
        'mre_seed': format_number(report.mre_seed),
        'mre_optimized': format_number(report.mre_optimized),
    }
    if report.re_upper is not None:
        document['re_upper'] = format_number(report.re_upper)
    document['ppt_separable'] = bool(report.ppt_separable)
    document['ensemble_used'] = report.ensemble_used
    return document


def ext_werner_document(report: ExtWernerReport) -> dict[str, Any]:
    """JSON-ready document of the closed-form quantities of an extended Werner state."""
    return {
        'b': _format_values(report.params.b_),
        'c': _format_values(report.params.c_),
        'eigenvalues': _format_values(report.eigenvalues),
        'mre': format_number(report.mre),
        'separable': report.separable,
        'separable_printed': report.separable_printed,
    }


def optimization_document(result: OptResult, state: DensityMatrix | PureState) -> dict[str, Any]:
    """JSON-ready document of a search result."""
    return {
        'objective': result.objective,
        'state': state_document(state),
        'seed_value': format_number(result.seed_value),
        'seed_values': {name: format_number(value) for name, value in result.seed_values.items()},
        'best_value': format_number(result.best_value),
        'evaluations': result.evaluations,
        'converged': result.converged,
        'ensemble': ensemble_summary(result.best_start, result.best_decomposition),
    }


def dumps_json(document: dict[str, Any] | list[dict[str, Any]]) -> str:
    """Stable JSON text of a document."""
    return json.dumps(document, indent=2) + '\n'


def dumps_csv(name: str, columns: tuple[str, ...], rows: list[dict[str, Any]]) -> str:
    """CSV text with a version comment line and a fixed header."""
    buffer = io.StringIO()
    buffer.write(f'# skentangle {name} {CSV_VERSION}\n')
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(row.get(column)) for column in columns])
    return buffer.getvalue()
