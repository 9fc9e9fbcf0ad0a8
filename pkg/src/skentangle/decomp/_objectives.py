"""Entanglement objectives of an ensemble."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import numpy as np
import numpy.typing as npt

from ..measures import ProductTerm, ef_pure, relative_entropy, relative_state_pure, relative_state_terms
from ..states import DensityMatrix, as_density
from ._ensembles import Decomposition

MERGE_TOL = 1e-9


def ensemble_product_terms(decomposition: Decomposition) -> list[ProductTerm]:
    """Product terms of the total relative state Σ p_i R(ψ_i), with equal factors merged."""
    merged: list[ProductTerm] = []
    for weight, state in decomposition:
        for term in relative_state_terms(state):
            for index, existing in enumerate(merged):
                if np.allclose(existing.bloch_a, term.bloch_a, atol=MERGE_TOL) and np.allclose(
                    existing.bloch_b,
                    term.bloch_b,
                    atol=MERGE_TOL,
                ):
                    merged[index] = existing._replace(weight=existing.weight + weight * term.weight)
                    break
            else:
                merged.append(term._replace(weight=weight * term.weight))
    return merged


def total_relative_state(decomposition: Decomposition) -> DensityMatrix:
    """Total relative state Σ p_i R(ψ_i) of an ensemble."""
    matrix = np.sum([weight * relative_state_pure(state).matrix for weight, state in decomposition], axis=0)
    return DensityMatrix(matrix, check=False)


def mre_of_ensemble(rho: DensityMatrix, decomposition: Decomposition) -> tuple[float, DensityMatrix]:
    """Relative entropy of the state to the total relative state of an ensemble, without resynthesis check."""
    relative_state = total_relative_state(decomposition)
    return relative_entropy(rho, relative_state), relative_state


def ef_of_ensemble(decomposition: Decomposition) -> float:
    """Average pure-state entanglement Σ p_i E(ψ_i), without resynthesis check."""
    return float(sum(weight * ef_pure(state) for weight, state in decomposition))


def mre_of_decomposition(
    rho: DensityMatrix | npt.ArrayLike,
    d: Decomposition,
) -> tuple[float, DensityMatrix]:
    """Modified relative entropy of a state for one of its ensembles.

    Args:
        rho:
            The two-qubit state.

        d:
            An ensemble that resynthesizes the state.

    Returns:
        value:
            The relative entropy S(ρ‖R_M) in bits.

        relative_state:
            The total relative state R_M = Σ p_i R(ψ_i).
    """
    rho = as_density(rho)
    d.check_decomposes(rho)
    return mre_of_ensemble(rho, d)


def ef_of_decomposition(rho: DensityMatrix | npt.ArrayLike, d: Decomposition) -> float:
    """Average pure-state entanglement of an ensemble that resynthesizes the state."""
    d.check_decomposes(as_density(rho))
    return ef_of_ensemble(d)
