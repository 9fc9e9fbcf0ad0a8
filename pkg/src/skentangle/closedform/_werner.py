"""Closed forms of the Werner states."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from dataclasses import dataclass
from numbers import Real

import numpy as np
from scipy.special import xlogy
from sklearn.utils import check_scalar

from ..states import DensityMatrix, werner_params
from ._ext_werner import ext_werner_separable

DISENTANGLED_F = 0.25


@dataclass(frozen=True, eq=False)
class WernerReport:
    """Closed-form quantities of a Werner state."""

    F: float
    mre: float
    relative_state: DensityMatrix
    separable: bool


def _check_F(F: float) -> float:
    return float(check_scalar(F, 'F', Real, min_val=0.0, max_val=1.0))


def werner_relative_state(F: float) -> DensityMatrix:
    """Total relative state diag((1 − F)/3, (1 + 2F)/6, (1 + 2F)/6, (1 − F)/3) of the Bell ensemble."""
    F = _check_F(F)
    outer, inner = (1 - F) / 3, (1 + 2 * F) / 6
    return DensityMatrix(np.diag([outer, inner, inner, outer]).astype(complex), check=False)


def werner_mre(F: float, raw: bool = False) -> float:
    """Modified relative entropy of the Werner state from its Bell ensemble.

    The value is F log₂ F + (1 − F)/3 log₂((1 − F)/3) − (1 + 2F)/3 log₂((1 + 2F)/6).

    Args:
        F:
            The singlet weight in [0, 1].

        raw:
            Whether to return the expression for every F. Otherwise states with F below 1/4
            give 0 and the value is clamped at 0.

    Returns:
        mre:
            The value in bits.
    """
    F = _check_F(F)
    value = float((xlogy(F, F) + xlogy((1 - F) / 3, (1 - F) / 3) - xlogy((1 + 2 * F) / 3, (1 + 2 * F) / 6)) / np.log(2))
    if raw:
        return value
    if F < DISENTANGLED_F:
        return 0.0
    return max(value, 0.0)


def werner_report(F: float) -> WernerReport:
    """Closed-form MRE, relative state and separability of the Werner state."""
    return WernerReport(
        F=_check_F(F),
        mre=werner_mre(F),
        relative_state=werner_relative_state(F),
        separable=ext_werner_separable(werner_params(F)),
    )
