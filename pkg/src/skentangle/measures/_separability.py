"""Positive partial transpose test."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from scipy.linalg import eigvalsh

from ..linalg import partial_transpose
from ..states import as_density
from ._pauli import StateLike

PPT_TOL = 1e-10


def min_partial_transpose_eigenvalue(rho: StateLike) -> float:
    """Smallest eigenvalue of the partial transpose of a two-qubit state."""
    return float(eigvalsh(partial_transpose(as_density(rho).matrix))[0])


def ppt_separable(rho: StateLike) -> bool:
    """Whether the partial transpose of a two-qubit state is positive, which is equivalent to separability."""
    return min_partial_transpose_eigenvalue(rho) >= -PPT_TOL
