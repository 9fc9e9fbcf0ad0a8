"""Entropies, relative states and entanglement measures of two qubits."""

from ._entropy import binary_entropy, relative_entropy, von_neumann_entropy
from ._formation import (
    concurrence,
    ef_pure,
    ef_wootters,
    spin_flip_overlaps,
    spin_flip_singular_values,
    weighted_eigenvectors,
)
from ._pauli import (
    PauliCoefficients,
    bloch_projector,
    bloch_vector,
    pauli_coefficients,
    polarization_vectors,
    reduced_polarization,
)
from ._relative_state import (
    ProductTerm,
    SchmidtDecomposition,
    product_terms_matrix,
    relative_state_pure,
    relative_state_terms,
    schmidt_decomposition,
    schmidt_relative_state,
)
from ._separability import min_partial_transpose_eigenvalue, ppt_separable

__all__: list[str] = [
    'PauliCoefficients',
    'ProductTerm',
    'SchmidtDecomposition',
    'binary_entropy',
    'bloch_projector',
    'bloch_vector',
    'concurrence',
    'ef_pure',
    'ef_wootters',
    'min_partial_transpose_eigenvalue',
    'pauli_coefficients',
    'polarization_vectors',
    'ppt_separable',
    'product_terms_matrix',
    'reduced_polarization',
    'relative_entropy',
    'relative_state_pure',
    'relative_state_terms',
    'schmidt_decomposition',
    'schmidt_relative_state',
    'spin_flip_overlaps',
    'spin_flip_singular_values',
    'von_neumann_entropy',
    'weighted_eigenvectors',
]
