"""Test the linear algebra module."""

import numpy as np
import pytest
from skentangle.exceptions import DimensionError, NonHermitianError
from skentangle.linalg import PAULI, hermitian_eigensystem, is_hermitian, kron, partial_trace, partial_transpose
from skentangle.states import bell, computational, lambda_state, werner

I2, X, _, Z = PAULI


def _random_hermitian(rng: np.random.Generator) -> np.ndarray:
    matrix = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    return (matrix + matrix.conj().T) / 2


def _random_qubit_density(rng: np.random.Generator) -> np.ndarray:
    matrix = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    matrix = matrix @ matrix.conj().T
    return matrix / np.trace(matrix)


@pytest.mark.parametrize(
    ('A', 'B', 'expected'),
    [
        (I2, I2, np.eye(4)),
        (Z, Z, np.diag([1, -1, -1, 1])),
        (X, X, np.fliplr(np.eye(4))),
    ],
)
def test_kron(A, B, expected):
    """Test the tensor product of one-qubit operators."""
    np.testing.assert_allclose(kron(A, B), expected)


def test_kron_wrong_dimension():
    """Test raising an error for operators that are not 2x2."""
    with pytest.raises(DimensionError, match='Parameter `A` should be a 2x2 matrix'):
        kron(np.eye(4), I2)


@pytest.mark.parametrize(
    ('M', 'eigenvalues'),
    [
        (np.eye(4) / 4, [0.25, 0.25, 0.25, 0.25]),
        (werner(1.0).matrix, [1.0, 0.0, 0.0, 0.0]),
        (lambda_state(0.5).matrix, [0.853553390593, 0.146446609407, 0.0, 0.0]),
    ],
)
def test_hermitian_eigensystem_eigenvalues(M, eigenvalues):
    """Test the eigenvalues in descending order."""
    np.testing.assert_allclose(hermitian_eigensystem(M).eigenvalues, eigenvalues, atol=1e-10)


def test_hermitian_eigensystem_round_trip():
    """Test the reconstruction and orthonormality of random eigensystems."""
    rng = np.random.default_rng(3)
    for _ in range(1000):
        M = _random_hermitian(rng)
        eigensystem = hermitian_eigensystem(M)
        assert np.max(np.abs(eigensystem.reconstruct() - M)) <= 1e-10
        vectors = eigensystem.eigenvectors
        np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-10)
        assert np.all(np.diff(eigensystem.eigenvalues) <= 0)


def test_hermitian_eigensystem_degenerate_basis():
    """Test the canonical basis of a degenerate eigenspace."""
    eigensystem = hermitian_eigensystem(werner(0.4).matrix)
    np.testing.assert_allclose(eigensystem.eigenvalues, [0.4, 0.2, 0.2, 0.2], atol=1e-12)
    np.testing.assert_allclose(np.abs(eigensystem.eigenvectors[:, 0]), np.abs(bell('psi-').vector), atol=1e-12)
    np.testing.assert_allclose(eigensystem.eigenvectors[:, 1], computational(0).vector, atol=1e-12)
    np.testing.assert_allclose(eigensystem.eigenvectors[:, 2], bell('psi+').vector, atol=1e-12)
    np.testing.assert_allclose(eigensystem.eigenvectors[:, 3], computational(3).vector, atol=1e-12)


def test_hermitian_eigensystem_deterministic_phases():
    """Test that the first significant component of every eigenvector is real and positive."""
    rng = np.random.default_rng(5)
    eigensystem = hermitian_eigensystem(_random_hermitian(rng))
    for vector in eigensystem.eigenvectors.T:
        first = vector[np.flatnonzero(np.abs(vector) > 1e-9)[0]]
        assert abs(first.imag) <= 1e-12
        assert first.real > 0


def test_hermitian_eigensystem_non_hermitian():
    """Test raising an error for non-Hermitian matrices."""
    with pytest.raises(NonHermitianError, match='should be Hermitian'):
        hermitian_eigensystem(np.triu(np.ones((4, 4))))


def test_is_hermitian():
    """Test the Hermiticity check."""
    assert is_hermitian(PAULI[2])
    assert not is_hermitian(np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize(
    ('rho', 'keep', 'expected'),
    [
        (bell('phi+').projector(), 'B', np.eye(2) / 2),
        (computational(0).projector(), 'A', np.diag([1, 0])),
        (np.outer([np.sqrt(0.8), 0, 0, np.sqrt(0.2)], [np.sqrt(0.8), 0, 0, np.sqrt(0.2)]), 'B', np.diag([0.8, 0.2])),
    ],
)
def test_partial_trace(rho, keep, expected):
    """Test the reduced operators."""
    np.testing.assert_allclose(partial_trace(rho, keep), expected, atol=1e-12)


def test_partial_trace_of_products():
    """Test that the partial trace of a product recovers its factors."""
    rng = np.random.default_rng(7)
    for _ in range(100):
        rho_a, rho_b = _random_qubit_density(rng), _random_qubit_density(rng)
        product = kron(rho_a, rho_b)
        np.testing.assert_allclose(partial_trace(product, 'A'), rho_a, atol=1e-12)
        np.testing.assert_allclose(partial_trace(product, 'B'), rho_b, atol=1e-12)
        assert abs(np.trace(partial_trace(product, 'B')) - np.trace(product)) <= 1e-12


def test_partial_trace_wrong_subsystem():
    """Test raising an error for an unknown subsystem."""
    with pytest.raises(ValueError, match='Parameter `keep` should be either'):
        partial_trace(np.eye(4) / 4, 'C')


def test_partial_trace_wrong_dimension():
    """Test raising an error for operators that are not 4x4."""
    with pytest.raises(DimensionError, match='Parameter `rho` should be a 4x4 matrix'):
        partial_trace(np.eye(2), 'A')


def test_partial_transpose():
    """Test the partial transpose of products, Bell states and the maximally mixed state."""
    rng = np.random.default_rng(11)
    rho_a, rho_b = _random_qubit_density(rng).real, _random_qubit_density(rng).real
    np.testing.assert_allclose(partial_transpose(kron(rho_a, rho_b)), kron(rho_a, rho_b.T))
    assert np.linalg.eigvalsh(partial_transpose(bell('phi+').projector()))[0] == pytest.approx(-0.5)
    np.testing.assert_array_equal(partial_transpose(np.eye(4) / 4), np.eye(4) / 4)


def test_partial_transpose_involution():
    """Test that the partial transpose is its own inverse."""
    rng = np.random.default_rng(13)
    for _ in range(100):
        M = _random_hermitian(rng)
        np.testing.assert_array_equal(partial_transpose(partial_transpose(M)), M)
