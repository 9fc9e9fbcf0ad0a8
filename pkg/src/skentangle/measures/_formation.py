"""Entanglement of formation and concurrence."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import numpy as np
import numpy.typing as npt
from scipy.linalg import svdvals

from ..linalg import PAULI, ComplexMatrix, partial_trace
from ..states import PureState, as_density, as_pure
from ._entropy import binary_entropy, von_neumann_entropy
from ._pauli import StateLike

SPIN_FLIP = np.kron(PAULI[2], PAULI[2]).real.astype(complex)
ZERO_TOL = 1e-12


def ef_pure(psi: PureState | npt.ArrayLike) -> float:
    """Entanglement of a pure state, the entropy of its reduced state on subsystem B."""
    return von_neumann_entropy(partial_trace(as_pure(psi).projector(), keep='B'))


def weighted_eigenvectors(rho: StateLike) -> ComplexMatrix:
    """Eigenvectors of the state scaled by the square roots of their eigenvalues, stored as columns."""
    eigensystem = as_density(rho).eigensystem
    return eigensystem.eigenvectors * np.sqrt(np.clip(eigensystem.eigenvalues, 0.0, None))


def spin_flip_overlaps(rho: StateLike) -> ComplexMatrix:
    """Symmetric matrix τ[i, j] = ⟨w_i|σ_y ⊗ σ_y|w_j*⟩ over the weighted eigenvectors w_i.

    Its singular values are the square roots of the eigenvalues of ρ (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y).
    """
    weighted = weighted_eigenvectors(rho)
    return weighted.conj().T @ SPIN_FLIP @ weighted.conj()


def spin_flip_singular_values(rho: StateLike) -> npt.NDArray[np.float64]:
    """Singular values of the spin-flip overlaps in descending order."""
    return svdvals(spin_flip_overlaps(rho))


def concurrence(rho: StateLike) -> float:
    """Concurrence max(0, λ₁ − λ₂ − λ₃ − λ₄) of a two-qubit state, with values below 1e-12 set to 0."""
    lambdas = spin_flip_singular_values(rho)
    value = float(np.clip(lambdas[0] - lambdas[1:].sum(), 0.0, 1.0))
    return value if value >= ZERO_TOL else 0.0


def ef_wootters(rho: StateLike) -> tuple[float, float]:
    """Concurrence and entanglement of formation from the spin-flip construction.

    Args:
        rho:
            The two-qubit state.

    Returns:
        concurrence:
            The concurrence C in [0, 1].

        ef:
            The entanglement of formation h((1 + √(1 − C²)) / 2) in bits.
    """
    value = concurrence(rho)
    return value, binary_entropy(min((1 + np.sqrt(1 - value**2)) / 2, 1.0))
