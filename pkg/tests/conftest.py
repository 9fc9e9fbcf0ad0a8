"""Configuration for the pytest test suite."""

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest
from skentangle.decomp import OptimizerConfig
from skentangle.states import DensityMatrix, PureState, dump_state


@pytest.fixture
def fast_config() -> OptimizerConfig:
    """Search parameters with a small budget."""
    return OptimizerConfig(restarts=1, max_iter=30, seed=0)


@pytest.fixture
def state_file(tmp_path: Path) -> Callable[[DensityMatrix | PureState, str], Path]:
    """Writer of state files in a temporary directory."""

    def write(state: DensityMatrix | PureState, name: str = 'state.json') -> Path:
        return dump_state(state, tmp_path / name)

    return write


@pytest.fixture
def d_state() -> DensityMatrix:
    """Equal mixture of |00⟩ and |11⟩."""
    return DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex))
