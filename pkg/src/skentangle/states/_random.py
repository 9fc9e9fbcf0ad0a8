"""Random two-qubit states."""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import numpy as np
from sklearn.utils import check_random_state, check_scalar

from ._states import DensityMatrix, PureState


def random_pure_state(random_state: np.random.RandomState | int | None = None) -> PureState:
    """Draw a pure state from normalized complex Gaussian amplitudes.

    Args:
        random_state:
            Seed or generator of the draw.

    Returns:
        state:
            The random pure state.
    """
    generator = check_random_state(random_state)
    amplitudes = generator.normal(size=4) + 1j * generator.normal(size=4)
    return PureState.from_amplitudes(amplitudes)


def random_density_matrix(rank: int = 4, random_state: np.random.RandomState | int | None = None) -> DensityMatrix:
    """Draw a mixed state G G† / Tr(G G†) from a complex Gaussian 4 x rank matrix G.

    Args:
        rank:
            The rank of the state, between 1 and 4.

        random_state:
            Seed or generator of the draw.

    Returns:
        rho:
            The random density matrix.
    """
    check_scalar(rank, 'rank', int, min_val=1, max_val=4)
    generator = check_random_state(random_state)
    ginibre = generator.normal(size=(4, rank)) + 1j * generator.normal(size=(4, rank))
    matrix = ginibre @ ginibre.conj().T
    matrix = (matrix + matrix.conj().T) / 2
    return DensityMatrix(matrix / np.trace(matrix).real, check=False)
