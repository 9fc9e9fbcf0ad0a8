"""Dense complex matrices of one and two qubits.

This module implements the small linear algebra kernel used throughout the
package: tensor products, Hermitian eigendecompositions with deterministic
degenerate eigenspaces, partial traces and partial transposes. The basis order
of two qubits is |00⟩, |01⟩, |10⟩, |11⟩ with the first qubit being subsystem A.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from dataclasses import dataclass
from typing import Literal, Self

import numpy as np
import numpy.typing as npt
from scipy.linalg import eigh

from ..exceptions import DimensionError, NonHermitianError

SUPPORTED_DIMS = (2, 4)
HERMITIAN_TOL = 1e-10
DEGENERACY_GAP = 1e-9
SIGNIFICANT_MODULUS = 1e-9
RESIDUAL_THRESHOLD = 0.1

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULI_PRODUCTS = np.einsum('mij,nkl->mnikjl', PAULI, PAULI).reshape(4, 4, 4, 4)

ComplexMatrix = npt.NDArray[np.complex128]


def check_matrix(M: npt.ArrayLike, dims: tuple[int, ...] = SUPPORTED_DIMS, name: str = 'M') -> ComplexMatrix:
    """Check that the input is a square complex matrix of a supported dimension.

    Args:
        M:
            The input matrix.

        dims:
            The allowed dimensions.

        name:
            The name of the parameter used in error messages.

    Returns:
        matrix:
            A complex copy of the input.
    """
    matrix = np.array(M, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] not in dims:
        allowed = ' or '.join(f'{dim}x{dim}' for dim in dims)
        error_msg = f'Parameter `{name}` should be a {allowed} matrix. Got shape {matrix.shape} instead.'
        raise DimensionError(error_msg)
    return matrix


def is_hermitian(M: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> bool:
    """Check whether a matrix is Hermitian entrywise within a tolerance."""
    matrix = np.asarray(M, dtype=complex)
    return bool(np.max(np.abs(matrix - matrix.conj().T), initial=0.0) <= tol)


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    Args:
        eigenvalues:
            Real eigenvalues in descending order.

        eigenvectors:
            Orthonormal eigenvectors stored as columns, aligned with `eigenvalues`.
    """

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix

    def reconstruct(self: Self) -> ComplexMatrix:
        """Rebuild the matrix from its eigenpairs."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

    def __len__(self: Self) -> int:
        """Number of eigenpairs."""
        return self.eigenvalues.size


def kron(A: npt.ArrayLike, B: npt.ArrayLike) -> ComplexMatrix:
    """Tensor product of two one-qubit operators.

    Args:
        A:
            The 2x2 operator acting on subsystem A.

        B:
            The 2x2 operator acting on subsystem B.

    Returns:
        product:
            The 4x4 operator in the basis |00⟩, |01⟩, |10⟩, |11⟩.
    """
    A = check_matrix(A, dims=(2,), name='A')
    B = check_matrix(B, dims=(2,), name='B')
    return np.kron(A, B)


def _fix_phases(vectors: ComplexMatrix) -> ComplexMatrix:
    fixed = vectors.copy()
    for col in range(fixed.shape[1]):
        significant = np.flatnonzero(np.abs(fixed[:, col]) > SIGNIFICANT_MODULUS)
        if significant.size:
            first = fixed[significant[0], col]
            fixed[:, col] *= np.conj(first) / np.abs(first)
    return fixed


def _first_significant(vector: ComplexMatrix) -> int:
    return int(np.flatnonzero(np.abs(vector) > SIGNIFICANT_MODULUS)[0])


def _canonical_basis(vectors: ComplexMatrix) -> ComplexMatrix:
    """Basis of the span of `vectors` built from the projected computational basis."""
    dim, size = vectors.shape
    projector = vectors @ vectors.conj().T
    basis: list[ComplexMatrix] = []
    for index in range(dim):
        residual = projector[:, index].copy()
        for vector in basis:
            residual -= (vector.conj() @ residual) * vector
        norm = np.linalg.norm(residual)
        if norm > RESIDUAL_THRESHOLD:
            basis.append(residual / norm)
        if len(basis) == size:
            break
    columns = _fix_phases(np.column_stack(basis))
    order = sorted(range(columns.shape[1]), key=lambda col: _first_significant(columns[:, col]))
    return columns[:, order]


def hermitian_eigensystem(M: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    Eigenvalues closer than `DEGENERACY_GAP` form a cluster whose eigenvectors are replaced by
    a canonical basis: the computational basis vectors are projected onto the eigenspace and
    orthonormalized in order. Every eigenvector is then rotated so that its first component
    with modulus above `SIGNIFICANT_MODULUS` is real and positive.

    Args:
        M:
            A 2x2 or 4x4 Hermitian matrix.

        tol:
            The entrywise tolerance of the Hermiticity check.

    Returns:
        eigensystem:
            The eigenvalues in descending order and the aligned eigenvectors.
    """
    matrix = check_matrix(M)
    if not is_hermitian(matrix, tol):
        error_msg = f'Parameter `M` should be Hermitian within {tol}.'
        raise NonHermitianError(error_msg)
    eigenvalues, eigenvectors = eigh((matrix + matrix.conj().T) / 2)
    eigenvalues, eigenvectors = eigenvalues[::-1].copy(), eigenvectors[:, ::-1].copy()
    start = 0
    for end in range(1, eigenvalues.size + 1):
        if end == eigenvalues.size or eigenvalues[end - 1] - eigenvalues[end] >= DEGENERACY_GAP:
            if end - start > 1:
                eigenvectors[:, start:end] = _canonical_basis(eigenvectors[:, start:end])
            start = end
    return EigenSystem(eigenvalues=eigenvalues, eigenvectors=_fix_phases(eigenvectors))


def partial_trace(rho: npt.ArrayLike, keep: Literal['A', 'B']) -> ComplexMatrix:
    """Reduced operator of one qubit.

    Args:
        rho:
            The 4x4 operator of two qubits.

        keep:
            The subsystem that is kept, either `'A'` or `'B'`.

    Returns:
        reduced:
            The 2x2 reduced operator.
    """
    matrix = check_matrix(rho, dims=(4,), name='rho').reshape(2, 2, 2, 2)
    if keep == 'A':
        return np.einsum('ijkj->ik', matrix)
    if keep == 'B':
        return np.einsum('ijil->jl', matrix)
    error_msg = f'Parameter `keep` should be either `\'A\'` or `\'B\'`. Got `{keep}` instead.'
    raise ValueError(error_msg)


def partial_transpose(rho: npt.ArrayLike) -> ComplexMatrix:
    """Transpose of the second qubit's indices of a two-qubit operator."""
    matrix = check_matrix(rho, dims=(4,), name='rho').reshape(2, 2, 2, 2)
    return matrix.transpose(0, 3, 2, 1).reshape(4, 4)
