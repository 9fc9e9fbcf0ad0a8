"""Two-qubit states.

This module implements the validated state containers and the constructors of
the state families used throughout the package: Bell states, Werner states,
extended Werner states and the λ-state mixture of |Φ⁺⟩ and |00⟩.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

from functools import cached_property
from numbers import Real
from typing import Literal, Self

import numpy as np
import numpy.typing as npt
from sklearn.utils import check_array, check_scalar

from ..base import BaseParameters
from ..exceptions import DimensionError, NegativeEigenvalueError, NonHermitianError, NormalizationError, TraceError
from ..linalg import ComplexMatrix, EigenSystem, check_matrix, hermitian_eigensystem, is_hermitian

DENSITY_TOL = 1e-10
NORM_TOL = 1e-12
WEIGHTS_TOL = 1e-12
BELL_KINDS = ('phi+', 'phi-', 'psi+', 'psi-')
BellKind = Literal['phi+', 'phi-', 'psi+', 'psi-']


class DensityMatrix:
    """Validated density matrix of one or two qubits.

    Args:
        matrix:
            A 2x2 or 4x4 complex matrix.

        tol:
            Tolerance of the Hermiticity, trace and positivity checks.

        check:
            Whether to validate the matrix. Only computations that produce valid states by
            construction should disable it.
    """

    def __init__(self: Self, matrix: npt.ArrayLike, tol: float = DENSITY_TOL, check: bool = True) -> None:
        """Initialize the density matrix."""
        checked = check_matrix(matrix, name='matrix')
        if check:
            _check_density(checked, tol)
        checked.setflags(write=False)
        self.matrix: ComplexMatrix = checked

    @property
    def dim(self: Self) -> int:
        """Dimension of the Hilbert space."""
        return self.matrix.shape[0]

    @cached_property
    def eigensystem(self: Self) -> EigenSystem:
        """Eigendecomposition with descending eigenvalues."""
        return hermitian_eigensystem(self.matrix)

    @property
    def rank(self: Self) -> int:
        """Number of eigenvalues above the support tolerance."""
        return int(np.sum(self.eigensystem.eigenvalues > 1e-12))

    def __array__(self: Self, dtype: npt.DTypeLike = None, copy: bool | None = None) -> ComplexMatrix:
        """Array view of the density matrix."""
        return np.array(self.matrix, dtype=dtype, copy=True)

    def __repr__(self: Self) -> str:
        """Representation of the density matrix."""
        return f'{self.__class__.__name__}(dim={self.dim}, rank={self.rank})'


def _check_density(matrix: ComplexMatrix, tol: float) -> None:
    if not is_hermitian(matrix, tol):
        error_msg = f'Density matrix should be Hermitian within {tol}.'
        raise NonHermitianError(error_msg)
    trace = np.trace(matrix)
    if abs(trace - 1.0) > tol:
        error_msg = f'Density matrix should have unit trace within {tol}. Got trace {trace.real:.12g} instead.'
        raise TraceError(error_msg)
    min_eigenvalue = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0]
    if min_eigenvalue < -tol:
        error_msg = (
            f'Density matrix should be positive semidefinite within {tol}. '
            f'Got negative eigenvalue {min_eigenvalue:.12g} instead.'
        )
        raise NegativeEigenvalueError(error_msg)


def validate_density(M: npt.ArrayLike, tol: float = DENSITY_TOL) -> DensityMatrix:
    """Validate a matrix as a density matrix.

    Invalid inputs are rejected, never repaired.

    Args:
        M:
            A 2x2 or 4x4 complex matrix.

        tol:
            Tolerance of the Hermiticity, trace and positivity checks.

    Returns:
        rho:
            The validated density matrix.
    """
    return DensityMatrix(M, tol=tol)


class PureState:
    """Normalized two-qubit pure state a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩.

    Args:
        amplitudes:
            The four complex amplitudes (a, b, c, d).

        tol:
            Tolerance of the normalization check.
    """

    def __init__(self: Self, amplitudes: npt.ArrayLike, tol: float = NORM_TOL) -> None:
        """Initialize the pure state."""
        vector = np.array(amplitudes, dtype=complex)
        if vector.shape != (4,):
            error_msg = f'Parameter `amplitudes` should have shape (4,). Got shape {vector.shape} instead.'
            raise DimensionError(error_msg)
        norm = np.vdot(vector, vector).real
        if abs(norm - 1.0) > tol:
            error_msg = f'Pure state should be normalized within {tol}. Got squared norm {norm:.12g} instead.'
            raise NormalizationError(error_msg)
        vector.setflags(write=False)
        self.vector: ComplexMatrix = vector

    @classmethod
    def from_amplitudes(cls: type[Self], amplitudes: npt.ArrayLike) -> Self:
        """Create a pure state by normalizing nonzero amplitudes."""
        vector = np.asarray(amplitudes, dtype=complex)
        return cls(vector / np.linalg.norm(vector))

    @property
    def amplitudes(self: Self) -> tuple[complex, complex, complex, complex]:
        """The amplitudes (a, b, c, d)."""
        a, b, c, d = (complex(amplitude) for amplitude in self.vector)
        return a, b, c, d

    def amplitude_matrix(self: Self) -> ComplexMatrix:
        """The amplitudes arranged as [[a, b], [c, d]]."""
        return self.vector.reshape(2, 2)

    def projector(self: Self) -> ComplexMatrix:
        """The rank one projector |ψ⟩⟨ψ|."""
        return np.outer(self.vector, self.vector.conj())

    def to_density(self: Self) -> DensityMatrix:
        """The density matrix of the state."""
        return DensityMatrix(self.projector(), check=False)

    def inner(self: Self, other: 'PureState') -> complex:
        """Inner product ⟨self|other⟩."""
        return complex(np.vdot(self.vector, other.vector))

    def __repr__(self: Self) -> str:
        """Representation of the pure state."""
        amplitudes = ', '.join(f'{amplitude:.6g}' for amplitude in self.vector)
        return f'{self.__class__.__name__}({amplitudes})'


def as_density(state: DensityMatrix | PureState | npt.ArrayLike, dims: tuple[int, ...] = (4,)) -> DensityMatrix:
    """Convert a state or a matrix to a validated density matrix."""
    if isinstance(state, PureState):
        rho = state.to_density()
    elif isinstance(state, DensityMatrix):
        rho = state
    else:
        rho = DensityMatrix(state)
    if rho.dim not in dims:
        error_msg = f'Expected a density matrix of dimension {dims}. Got dimension {rho.dim} instead.'
        raise DimensionError(error_msg)
    return rho


def as_pure(state: PureState | npt.ArrayLike) -> PureState:
    """Convert amplitudes to a validated pure state."""
    return state if isinstance(state, PureState) else PureState(state)


class ExtWernerParams(BaseParameters):
    """Weights of an extended Werner state.

    Args:
        b:
            The weights of the Bell states Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.

        c:
            The weights of the product states |00⟩, |01⟩, |10⟩, |11⟩.
    """

    def __init__(self: Self, b: npt.ArrayLike, c: npt.ArrayLike) -> None:
        """Initialize the extended Werner weights."""
        self.b = b
        self.c = c
        super().__init__()

    def _init_param(self: Self, param_name: str) -> Self:
        """Check a weights vector."""
        weights = check_array(getattr(self, param_name), ensure_2d=False, dtype=float, input_name=param_name)
        if weights.shape != (4,):
            error_msg = f'Parameter `{param_name}` should have 4 weights. Got shape {weights.shape} instead.'
            raise ValueError(error_msg)
        if np.any(weights < 0):
            error_msg = f'Parameter `{param_name}` should have nonnegative weights. Got {weights.tolist()} instead.'
            raise ValueError(error_msg)
        weights.setflags(write=False)
        setattr(self, f'{param_name}_', weights)
        return self

    def _check_params(self: Self) -> Self:
        """Check that the weights sum to one."""
        total = self.b_.sum() + self.c_.sum()
        if abs(total - 1.0) > WEIGHTS_TOL:
            error_msg = f'Weights `b` and `c` should sum to 1. Got {total:.12g} instead.'
            raise ValueError(error_msg)
        return self


def _check_unit_interval(value: float, name: str) -> float:
    return float(check_scalar(value, name, Real, min_val=0.0, max_val=1.0))


def bell(kind: BellKind) -> PureState:
    """Bell state.

    Args:
        kind:
            One of `'phi+'`, `'phi-'`, `'psi+'`, `'psi-'`.

    Returns:
        state:
            The Bell state (|00⟩ ± |11⟩)/√2 or (|01⟩ ± |10⟩)/√2.
    """
    amplitude = 1 / np.sqrt(2)
    vectors = {
        'phi+': [amplitude, 0, 0, amplitude],
        'phi-': [amplitude, 0, 0, -amplitude],
        'psi+': [0, amplitude, amplitude, 0],
        'psi-': [0, amplitude, -amplitude, 0],
    }
    if kind not in vectors:
        error_msg = f'Parameter `kind` should be one of {BELL_KINDS}. Got `{kind}` instead.'
        raise ValueError(error_msg)
    return PureState(vectors[kind])


def computational(index: int) -> PureState:
    """Computational basis state |00⟩, |01⟩, |10⟩ or |11⟩ for index 0 to 3."""
    check_scalar(index, 'index', int, min_val=0, max_val=3)
    return PureState(np.eye(4)[index])


def product_state(alpha: npt.ArrayLike, beta: npt.ArrayLike) -> PureState:
    """Product state |α⟩⊗|β⟩ of two normalized qubit vectors."""
    return PureState(np.kron(np.asarray(alpha, dtype=complex), np.asarray(beta, dtype=complex)))


def ext_werner(p: ExtWernerParams) -> DensityMatrix:
    """Extended Werner state Σ bᵢ|Bᵢ⟩⟨Bᵢ| + Σ cᵢ|i⟩⟨i|."""
    if not isinstance(p, ExtWernerParams):
        error_msg = f'Parameter `p` should be an `ExtWernerParams` object. Got `{type(p).__name__}` instead.'
        raise TypeError(error_msg)
    matrix = np.diag(p.c_).astype(complex)
    for weight, kind in zip(p.b_, BELL_KINDS, strict=True):
        matrix += weight * bell(kind).projector()
    return DensityMatrix(matrix, check=False)


def werner_params(F: float) -> ExtWernerParams:
    """Extended Werner weights of the Werner state with singlet weight F."""
    F = _check_unit_interval(F, 'F')
    rest = (1 - F) / 3
    return ExtWernerParams(b=[rest, rest, rest, F], c=[0.0, 0.0, 0.0, 0.0])


def werner(F: float) -> DensityMatrix:
    """Werner state F|Ψ⁻⟩⟨Ψ⁻| + (1 − F)/3 (|Ψ⁺⟩⟨Ψ⁺| + |Φ⁺⟩⟨Φ⁺| + |Φ⁻⟩⟨Φ⁻|)."""
    return ext_werner(werner_params(F))


def lambda_state(lam: float) -> DensityMatrix:
    """Mixture λ|Φ⁺⟩⟨Φ⁺| + (1 − λ)|00⟩⟨00|."""
    lam = _check_unit_interval(lam, 'lam')
    matrix = lam * bell('phi+').projector() + (1 - lam) * computational(0).projector()
    return DensityMatrix(matrix, check=False)
