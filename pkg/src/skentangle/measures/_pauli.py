"""Pauli expansion and polarization vectors."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from dataclasses import dataclass
from typing import Self

import numpy as np
import numpy.typing as npt

from ..linalg import PAULI, PAULI_PRODUCTS, ComplexMatrix, check_matrix
from ..states import DensityMatrix, PureState, as_density

StateLike = DensityMatrix | PureState | npt.ArrayLike
RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class PauliCoefficients:
    """Real coefficients a[μ, ν] of ρ = Σ a[μ, ν] σ_μ ⊗ σ_ν with σ_0 the identity."""

    a: npt.NDArray[np.float64]

    def reconstruct(self: Self) -> ComplexMatrix:
        """Rebuild the operator from its coefficients."""
        return np.einsum('mn,mnij->ij', self.a, PAULI_PRODUCTS)


def pauli_coefficients(rho: StateLike) -> PauliCoefficients:
    """Pauli expansion of a two-qubit state.

    Args:
        rho:
            The two-qubit state.

    Returns:
        coefficients:
            The coefficients a[μ, ν] = Tr(ρ σ_μ ⊗ σ_ν) / 4.
    """
    matrix = as_density(rho).matrix
    return PauliCoefficients(a=np.einsum('ij,mnji->mn', matrix, PAULI_PRODUCTS).real / 4)


def polarization_vectors(rho: StateLike) -> tuple[RealVector, RealVector]:
    """Polarization vectors ξ_A = Tr(ρ σ ⊗ I) and ξ_B = Tr(ρ I ⊗ σ)."""
    a = pauli_coefficients(rho).a
    return 4 * a[1:, 0], 4 * a[0, 1:]


def reduced_polarization(rho: npt.ArrayLike) -> RealVector:
    """Bloch vector Tr(ρ σ) of a one-qubit operator."""
    matrix = check_matrix(rho, dims=(2,), name='rho')
    return np.einsum('ij,mji->m', matrix, PAULI[1:]).real


def bloch_vector(vector: npt.ArrayLike) -> RealVector:
    """Bloch vector ⟨v|σ|v⟩ of a normalized qubit vector."""
    vector = np.asarray(vector, dtype=complex)
    return np.einsum('i,mij,j->m', vector.conj(), PAULI[1:], vector).real


def bloch_projector(n: npt.ArrayLike) -> ComplexMatrix:
    """One-qubit operator (I + n·σ) / 2."""
    return (PAULI[0] + np.einsum('m,mij->ij', np.asarray(n, dtype=float), PAULI[1:])) / 2
