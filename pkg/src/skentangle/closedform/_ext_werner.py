"""Closed forms of the extended Werner states.

An extended Werner state mixes the four Bell states with weights b and the computational
states with weights c. It is block diagonal on span{|00⟩, |11⟩} and span{|01⟩, |10⟩}, which
gives its eigenvalues, its partial transpose and the total relative state of its defining
ensemble in closed form.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.special import xlogy

from ..states import ExtWernerParams

SEPARABILITY_TOL = 1e-12
ZERO_TOL = 1e-12

SeparabilityForm = Literal['exact', 'printed']


@dataclass(frozen=True, eq=False)
class ExtWernerReport:
    """Closed-form quantities of an extended Werner state."""

    params: ExtWernerParams
    eigenvalues: npt.NDArray[np.float64]
    mre: float
    separable: bool
    separable_printed: bool


def _check_params(p: ExtWernerParams) -> ExtWernerParams:
    if not isinstance(p, ExtWernerParams):
        error_msg = f'Parameter `p` should be an `ExtWernerParams` object. Got `{type(p).__name__}` instead.'
        raise TypeError(error_msg)
    return p


def ext_werner_eigenvalues(p: ExtWernerParams) -> npt.NDArray[np.float64]:
    """Eigenvalues (v₁, v₂, v₃, v₄) of an extended Werner state.

    The pairs v₁ ≤ v₂ and v₃ ≤ v₄ are the eigenvalues of the span{|00⟩, |11⟩} and
    span{|01⟩, |10⟩} blocks.
    """
    b1, b2, b3, b4 = _check_params(p).b_
    c1, c2, c3, c4 = p.c_
    outer = np.hypot(b1 - b2, c1 - c4)
    inner = np.hypot(b3 - b4, c2 - c3)
    return np.array(
        [
            (b1 + b2 + c1 + c4 - outer) / 2,
            (b1 + b2 + c1 + c4 + outer) / 2,
            (b3 + b4 + c2 + c3 - inner) / 2,
            (b3 + b4 + c2 + c3 + inner) / 2,
        ],
    )


def ext_werner_relative_diagonal(p: ExtWernerParams) -> npt.NDArray[np.float64]:
    """Diagonal d of the total relative state of the defining ensemble, which is diagonal."""
    b1, b2, b3, b4 = _check_params(p).b_
    c1, c2, c3, c4 = p.c_
    return np.array([b1 + b2 + 2 * c1, b3 + b4 + 2 * c2, b3 + b4 + 2 * c3, b1 + b2 + 2 * c4]) / 2


def ext_werner_mre(p: ExtWernerParams) -> float:
    """Modified relative entropy Σ v log₂ v − Σ d log₂ d of the defining ensemble.

    Values below 1e-12 are returned as 0.
    """
    eigenvalues = np.clip(ext_werner_eigenvalues(p), 0.0, None)
    diagonal = ext_werner_relative_diagonal(p)
    value = (np.sum(xlogy(eigenvalues, eigenvalues)) - np.sum(xlogy(diagonal, diagonal))) / np.log(2)
    return float(value) if value >= ZERO_TOL else 0.0


def ext_werner_separable(p: ExtWernerParams, form: SeparabilityForm = 'exact') -> bool:
    """Separability of an extended Werner state from its partial transpose.

    Args:
        p:
            The extended Werner weights.

        form:
            `'exact'` tests the positivity of both 2x2 blocks of the partial transpose,
            (b₁ + b₂ + 2c₁)(b₁ + b₂ + 2c₄) ≥ (b₃ − b₄)² and (b₃ + b₄ + 2c₂)(b₃ + b₄ + 2c₃) ≥ (b₁ − b₂)².
            `'printed'` tests (b₁ + b₂)² ≥ (b₃ − b₄)² − 4c₁c₄ and (b₃ + b₄)² ≥ (b₁ − b₂)² − 4c₂c₃,
            which lack the cross terms 2(b₁ + b₂)(c₁ + c₄) and 2(b₃ + b₄)(c₂ + c₃) and agree with
            the exact form when those vanish.

    Returns:
        separable:
            Whether both inequalities hold within 1e-12.
    """
    b1, b2, b3, b4 = _check_params(p).b_
    c1, c2, c3, c4 = p.c_
    if form == 'exact':
        first = (b1 + b2 + 2 * c1) * (b1 + b2 + 2 * c4) - (b3 - b4) ** 2
        second = (b3 + b4 + 2 * c2) * (b3 + b4 + 2 * c3) - (b1 - b2) ** 2
    elif form == 'printed':
        first = (b1 + b2) ** 2 - (b3 - b4) ** 2 + 4 * c1 * c4
        second = (b3 + b4) ** 2 - (b1 - b2) ** 2 + 4 * c2 * c3
    else:
        error_msg = f'Parameter `form` should be either `exact` or `printed`. Got `{form}` instead.'
        raise ValueError(error_msg)
    return bool(first >= -SEPARABILITY_TOL and second >= -SEPARABILITY_TOL)


def ext_werner_report(p: ExtWernerParams) -> ExtWernerReport:
    """Closed-form eigenvalues, MRE and separability of an extended Werner state."""
    return ExtWernerReport(
        params=_check_params(p),
        eigenvalues=ext_werner_eigenvalues(p),
        mre=ext_werner_mre(p),
        separable=ext_werner_separable(p),
        separable_printed=ext_werner_separable(p, form='printed'),
    )
