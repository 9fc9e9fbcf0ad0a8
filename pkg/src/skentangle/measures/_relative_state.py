"""Relative states of pure two-qubit states.

The relative state of a pure state ψ is the separable mixture

    R(ψ) = (1 + |ξ|)/2 P(ξ̂_A) ⊗ P(ξ̂_B) + (1 − |ξ|)/2 P(−ξ̂_A) ⊗ P(−ξ̂_B),

where ξ_A, ξ_B are the polarization vectors of ψ, |ξ| their common length and
P(n) = (I + n·σ)/2. When |ξ| vanishes the unit vectors are undefined and the
relative state is built from the Schmidt form of ψ instead.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from dataclasses import dataclass
from typing import NamedTuple, Self

import numpy as np
import numpy.typing as npt
from scipy.linalg import svd

from ..linalg import ComplexMatrix
from ..states import DensityMatrix, PureState, as_pure
from ._pauli import RealVector, bloch_projector, bloch_vector, polarization_vectors

POLARIZATION_THRESHOLD = 1e-8
SIGNIFICANT_MODULUS = 1e-9
WEIGHT_TOL = 1e-15


class ProductTerm(NamedTuple):
    """Weighted product of two pure qubit states given by their Bloch vectors."""

    weight: float
    bloch_a: RealVector
    bloch_b: RealVector

    def matrix(self: Self) -> ComplexMatrix:
        """The operator weight · P(bloch_a) ⊗ P(bloch_b)."""
        return self.weight * np.kron(bloch_projector(self.bloch_a), bloch_projector(self.bloch_b))


def product_terms_matrix(terms: list[ProductTerm]) -> ComplexMatrix:
    """Sum of the operators of product terms."""
    return np.sum([term.matrix() for term in terms], axis=0)


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Schmidt form ψ = Σ s_i |e_i⟩ ⊗ |f_i⟩.

    Args:
        coefficients:
            The Schmidt coefficients s_i in descending order.

        left:
            The factors e_i of subsystem A, stored as columns.

        right:
            The factors f_i of subsystem B, stored as columns.
    """

    coefficients: RealVector
    left: ComplexMatrix
    right: ComplexMatrix

    def to_vector(self: Self) -> ComplexMatrix:
        """The amplitudes Σ s_i e_i ⊗ f_i."""
        return np.einsum('i,ai,bi->ab', self.coefficients, self.left, self.right).ravel()


def schmidt_decomposition(psi: PureState | npt.ArrayLike) -> SchmidtDecomposition:
    """Schmidt decomposition of a pure state from the singular values of its amplitude matrix.

    The phase of every pair is fixed so that the first component of e_i with modulus above
    1e-9 is real and positive.
    """
    left, coefficients, right_h = svd(as_pure(psi).amplitude_matrix())
    right = right_h.T.copy()
    for index in range(2):
        first = left[np.flatnonzero(np.abs(left[:, index]) > SIGNIFICANT_MODULUS)[0], index]
        phase = np.conj(first) / np.abs(first)
        left[:, index] *= phase
        right[:, index] /= phase
    return SchmidtDecomposition(coefficients=coefficients, left=left, right=right)


def schmidt_relative_state(psi: PureState | npt.ArrayLike) -> DensityMatrix:
    """Schmidt pinch Σ s_i² |e_i⟩⟨e_i| ⊗ |f_i⟩⟨f_i| of a pure state."""
    schmidt = schmidt_decomposition(psi)
    terms = [
        ProductTerm(float(s**2), bloch_vector(schmidt.left[:, index]), bloch_vector(schmidt.right[:, index]))
        for index, s in enumerate(schmidt.coefficients)
    ]
    return DensityMatrix(product_terms_matrix(terms), check=False)


def relative_state_terms(psi: PureState | npt.ArrayLike) -> list[ProductTerm]:
    """Product terms of the relative state of a pure state.

    Args:
        psi:
            The pure state.

    Returns:
        terms:
            At most two product terms with positive weights. When |ξ| ≤ 1e-8 the terms are
            the computational basis on A paired with the normalized rows of the amplitude
            matrix on B.
    """
    psi = as_pure(psi)
    xi_a, xi_b = polarization_vectors(psi)
    norm = float(np.linalg.norm(xi_a))
    if norm > POLARIZATION_THRESHOLD:
        unit_a, unit_b = xi_a / norm, xi_b / np.linalg.norm(xi_b)
        terms = [
            ProductTerm((1 + norm) / 2, unit_a, unit_b),
            ProductTerm((1 - norm) / 2, -unit_a, -unit_b),
        ]
    else:
        terms = []
        for index, row in enumerate(psi.amplitude_matrix()):
            weight = float(np.vdot(row, row).real)
            if weight > WEIGHT_TOL:
                terms.append(ProductTerm(weight, bloch_vector(np.eye(2)[index]), bloch_vector(row / np.sqrt(weight))))
    return [term for term in terms if term.weight > WEIGHT_TOL]


def relative_state_pure(psi: PureState | npt.ArrayLike) -> DensityMatrix:
    """Relative state of a pure state.

    Args:
        psi:
            The pure state.

    Returns:
        relative_state:
            The separable density matrix R(ψ).
    """
    return DensityMatrix(product_terms_matrix(relative_state_terms(psi)), check=False)
