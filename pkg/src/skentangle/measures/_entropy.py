"""Von Neumann and relative entropies in bits."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import logging
from numbers import Real

import numpy as np
from scipy.linalg import eigh, eigvalsh
from scipy.special import entr
from sklearn.utils import check_scalar

from ..exceptions import DimensionError
from ..states import as_density
from ._pauli import StateLike

logger = logging.getLogger(__name__)

EIGENVALUE_CLAMP = 1e-10
KERNEL_TOL = 1e-12
SUPPORT_MASS_TOL = 1e-10
NEGATIVE_ENTROPY_TOL = 1e-9


def _entropy_bits(probabilities: np.ndarray) -> float:
    return float(np.sum(entr(probabilities)) / np.log(2))


def von_neumann_entropy(rho: StateLike) -> float:
    """Von Neumann entropy −Tr ρ log₂ ρ.

    Eigenvalues in [−1e-10, 0) are treated as zero.

    Args:
        rho:
            A one-qubit or two-qubit state.

    Returns:
        entropy:
            The entropy in bits.
    """
    eigenvalues = eigvalsh(as_density(rho, dims=(2, 4)).matrix)
    eigenvalues = np.where((eigenvalues < 0) & (eigenvalues >= -EIGENVALUE_CLAMP), 0.0, eigenvalues)
    return _entropy_bits(eigenvalues)


def binary_entropy(x: float) -> float:
    """Binary entropy −x log₂ x − (1 − x) log₂(1 − x)."""
    x = float(check_scalar(x, 'x', Real, min_val=0.0, max_val=1.0))
    return _entropy_bits(np.array([x, 1 - x]))


def relative_entropy(rho: StateLike, sigma: StateLike) -> float:
    """Quantum relative entropy S(ρ‖σ) = −S(ρ) − Σ_α log₂ λ_α ⟨v_α|ρ|v_α⟩ over the eigenpairs of σ.

    Args:
        rho:
            The first state.

        sigma:
            The second state, of the same dimension.

    Returns:
        entropy:
            The relative entropy in bits, or `inf` when the mass of ρ on the kernel of σ
            exceeds 1e-10. The kernel collects the eigenvalues of σ below 1e-12.
    """
    rho_state = as_density(rho, dims=(2, 4))
    rho_matrix = rho_state.matrix
    sigma_matrix = as_density(sigma, dims=(2, 4)).matrix
    if rho_matrix.shape != sigma_matrix.shape:
        error_msg = (
            f'States should have the same dimension. Got dimensions {rho_matrix.shape[0]} '
            f'and {sigma_matrix.shape[0]} instead.'
        )
        raise DimensionError(error_msg)
    eigenvalues, eigenvectors = eigh(sigma_matrix)
    overlaps = np.einsum('ia,ij,ja->a', eigenvectors.conj(), rho_matrix, eigenvectors).real
    kernel = eigenvalues < KERNEL_TOL
    if overlaps[kernel].sum() > SUPPORT_MASS_TOL:
        return np.inf
    support = ~kernel
    value = -von_neumann_entropy(rho_state) - float(np.sum(overlaps[support] * np.log2(eigenvalues[support])))
    if value < 0:
        if value < -NEGATIVE_ENTROPY_TOL:
            logger.warning('Relative entropy %.3e is below the negative tolerance.', value)
            return value
        return 0.0
    return value
