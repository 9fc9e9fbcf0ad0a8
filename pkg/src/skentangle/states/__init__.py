"""Two-qubit states, state families and state files."""

from ._io import dump_state, load_state, parse_state, state_document
from ._random import random_density_matrix, random_pure_state
from ._states import (
    BELL_KINDS,
    DensityMatrix,
    ExtWernerParams,
    PureState,
    as_density,
    as_pure,
    bell,
    computational,
    ext_werner,
    lambda_state,
    product_state,
    validate_density,
    werner,
    werner_params,
)

__all__: list[str] = [
    'BELL_KINDS',
    'DensityMatrix',
    'ExtWernerParams',
    'PureState',
    'as_density',
    'as_pure',
    'bell',
    'computational',
    'dump_state',
    'ext_werner',
    'lambda_state',
    'load_state',
    'parse_state',
    'product_state',
    'random_density_matrix',
    'random_pure_state',
    'state_document',
    'validate_density',
    'werner',
    'werner_params',
]
