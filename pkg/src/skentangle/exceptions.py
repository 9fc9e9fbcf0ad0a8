"""Exceptions raised by `skentangle`."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT


class DimensionError(ValueError):
    """Raised when a matrix or vector has an unsupported shape."""


class StateValidationError(ValueError):
    """Base class for rejected quantum states."""


class NonHermitianError(StateValidationError):
    """Raised when a matrix is not Hermitian within tolerance."""


class TraceError(StateValidationError):
    """Raised when a density matrix does not have unit trace."""


class NegativeEigenvalueError(StateValidationError):
    """Raised when a density matrix has an eigenvalue below the tolerance."""


class NormalizationError(StateValidationError):
    """Raised when a pure state is not normalized."""


class DecompositionError(ValueError):
    """Raised when an ensemble does not resynthesize its target state."""


class StateFileError(ValueError):
    """Raised when a state file can not be parsed."""
