"""Linear algebra kernel for one and two qubits."""

from ._qmat import (
    PAULI,
    PAULI_PRODUCTS,
    ComplexMatrix,
    EigenSystem,
    check_matrix,
    hermitian_eigensystem,
    is_hermitian,
    kron,
    partial_trace,
    partial_transpose,
)

__all__: list[str] = [
    'PAULI',
    'PAULI_PRODUCTS',
    'ComplexMatrix',
    'EigenSystem',
    'check_matrix',
    'hermitian_eigensystem',
    'is_hermitian',
    'kron',
    'partial_trace',
    'partial_transpose',
]
