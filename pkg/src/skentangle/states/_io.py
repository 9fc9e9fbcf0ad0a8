"""State files.

A state file is a JSON document holding either a pure state, `{"pure": [[re, im], ...]}` with
four amplitudes, or a density matrix, `{"matrix": [[[re, im], ...], ...]}` with 4x4 entries.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import json
from pathlib import Path

import numpy as np
import numpy.typing as npt

from ..exceptions import StateFileError
from ._states import DensityMatrix, PureState


def _parse_complex(values: object, shape: tuple[int, ...], key: str) -> npt.NDArray[np.complex128]:
    try:
        pairs = np.array(values, dtype=float)
    except (TypeError, ValueError) as error:
        error_msg = f'Entries of `{key}` should be [re, im] pairs of numbers.'
        raise StateFileError(error_msg) from error
    if pairs.shape != (*shape, 2):
        error_msg = f'Entry `{key}` should have shape {(*shape, 2)}. Got shape {pairs.shape} instead.'
        raise StateFileError(error_msg)
    return pairs[..., 0] + 1j * pairs[..., 1]


def parse_state(document: object) -> DensityMatrix | PureState:
    """Build a state from a parsed state-file document.

    Args:
        document:
            The decoded JSON document.

    Returns:
        state:
            A pure state or a density matrix. Invalid states raise the corresponding
            `StateValidationError`.
    """
    if not isinstance(document, dict) or len(document.keys() & {'pure', 'matrix'}) != 1:
        error_msg = 'State file should contain exactly one of the keys `pure` or `matrix`.'
        raise StateFileError(error_msg)
    if 'pure' in document:
        return PureState(_parse_complex(document['pure'], (4,), 'pure'))
    return DensityMatrix(_parse_complex(document['matrix'], (4, 4), 'matrix'))


def load_state(path: str | Path) -> DensityMatrix | PureState:
    """Load a state from a JSON state file.

    Args:
        path:
            The path of the state file.

    Returns:
        state:
            A pure state or a density matrix.
    """
    try:
        document = json.loads(Path(path).read_text())
    except OSError as error:
        error_msg = f'State file `{path}` can not be read: {error.strerror}.'
        raise StateFileError(error_msg) from error
    except json.JSONDecodeError as error:
        error_msg = f'State file `{path}` is not valid JSON: {error.msg} at line {error.lineno}.'
        raise StateFileError(error_msg) from error
    return parse_state(document)


def state_document(state: DensityMatrix | PureState) -> dict[str, list]:
    """JSON-ready document of a state."""
    if isinstance(state, PureState):
        return {'pure': [[value.real, value.imag] for value in state.vector.tolist()]}
    return {'matrix': [[[value.real, value.imag] for value in row] for row in state.matrix.tolist()]}


def dump_state(state: DensityMatrix | PureState, path: str | Path) -> Path:
    """Write a state to a JSON state file.

    Args:
        state:
            The pure state or the density matrix.

        path:
            The path of the state file.

    Returns:
        path:
            The path of the written file.
    """
    path = Path(path)
    path.write_text(json.dumps(state_document(state)))
    return path
