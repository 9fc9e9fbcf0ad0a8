"""Test the states module."""

import json

import numpy as np
import pytest
from skentangle.exceptions import (
    DimensionError,
    NegativeEigenvalueError,
    NonHermitianError,
    NormalizationError,
    StateFileError,
    TraceError,
)
from skentangle.states import (
    BELL_KINDS,
    DensityMatrix,
    ExtWernerParams,
    PureState,
    as_density,
    bell,
    computational,
    dump_state,
    ext_werner,
    lambda_state,
    load_state,
    parse_state,
    product_state,
    random_density_matrix,
    random_pure_state,
    validate_density,
    werner,
    werner_params,
)

SQRT_HALF = 1 / np.sqrt(2)


@pytest.mark.parametrize('M', [np.eye(4) / 4, werner(0.5).matrix, np.eye(2) / 2])
def test_validate_density_valid(M):
    """Test accepting valid density matrices."""
    rho = validate_density(M)
    assert isinstance(rho, DensityMatrix)
    np.testing.assert_array_equal(rho.matrix, M)


@pytest.mark.parametrize(
    ('M', 'error', 'match'),
    [
        (np.diag([0.6, 0.6, -0.1, -0.1]), NegativeEigenvalueError, 'should be positive semidefinite'),
        (np.diag([0.5, 0.5, 0.5, 0.5]), TraceError, 'should have unit trace'),
        (np.triu(np.full((4, 4), 0.25)), NonHermitianError, 'should be Hermitian'),
        (np.eye(3) / 3, DimensionError, 'should be a 2x2 or 4x4 matrix'),
    ],
)
def test_validate_density_invalid(M, error, match):
    """Test rejecting invalid matrices with distinct errors."""
    with pytest.raises(error, match=match):
        validate_density(M)


def test_density_matrix_read_only():
    """Test that the matrix of a density matrix can not be modified."""
    rho = werner(0.3)
    with pytest.raises(ValueError, match='read-only'):
        rho.matrix[0, 0] = 1.0


def test_density_matrix_rank():
    """Test the rank of density matrices."""
    assert werner(1.0).rank == 1
    assert lambda_state(0.5).rank == 2
    assert DensityMatrix(np.eye(4) / 4).rank == 4
    assert repr(lambda_state(0.5)) == 'DensityMatrix(dim=4, rank=2)'


@pytest.mark.parametrize(
    ('kind', 'amplitudes'),
    [
        ('phi+', [SQRT_HALF, 0, 0, SQRT_HALF]),
        ('phi-', [SQRT_HALF, 0, 0, -SQRT_HALF]),
        ('psi+', [0, SQRT_HALF, SQRT_HALF, 0]),
        ('psi-', [0, SQRT_HALF, -SQRT_HALF, 0]),
    ],
)
def test_bell(kind, amplitudes):
    """Test the amplitudes of the Bell states."""
    np.testing.assert_allclose(bell(kind).vector, amplitudes)


def test_bell_orthonormal():
    """Test that the Bell states form an orthonormal basis."""
    overlaps = np.array([[bell(first).inner(bell(second)) for second in BELL_KINDS] for first in BELL_KINDS])
    np.testing.assert_allclose(overlaps, np.eye(4), atol=1e-15)


def test_bell_wrong_kind():
    """Test raising an error for an unknown Bell state."""
    with pytest.raises(ValueError, match='Parameter `kind` should be one of'):
        bell('omega')


def test_pure_state_normalization():
    """Test rejecting unnormalized amplitudes and normalizing them on request."""
    with pytest.raises(NormalizationError, match='should be normalized'):
        PureState([1, 1, 0, 0])
    state = PureState.from_amplitudes([1, 1j, 0, 0])
    np.testing.assert_allclose(state.amplitudes, (SQRT_HALF, 1j * SQRT_HALF, 0, 0))


def test_pure_state_wrong_shape():
    """Test raising an error for amplitudes that are not four."""
    with pytest.raises(DimensionError, match=r'should have shape \(4,\)'):
        PureState([1, 0])


def test_pure_state_matrices():
    """Test the amplitude matrix and the projector of a pure state."""
    state = PureState([0.6, 0, 0, 0.8])
    np.testing.assert_allclose(state.amplitude_matrix(), [[0.6, 0], [0, 0.8]])
    np.testing.assert_allclose(state.projector(), np.outer(state.vector, state.vector))
    np.testing.assert_allclose(as_density(state).matrix, state.projector())


def test_product_state():
    """Test the tensor product of qubit vectors."""
    np.testing.assert_allclose(product_state([0, 1], [1, 0]).vector, computational(2).vector)


@pytest.mark.parametrize('F', [0.0, 0.25, 0.5, 1.0])
def test_werner_valid(F):
    """Test that Werner states pass validation."""
    validate_density(werner(F).matrix)


def test_werner_special_cases():
    """Test the Werner states at F = 1 and F = 1/4."""
    np.testing.assert_allclose(werner(1.0).matrix, bell('psi-').projector(), atol=1e-15)
    np.testing.assert_allclose(werner(0.25).matrix, np.eye(4) / 4, atol=1e-15)


def test_werner_eigenvalues():
    """Test that the eigenvalues of Werner states are F and (1 - F)/3."""
    for F in np.linspace(0.0, 1.0, 101):
        eigenvalues = np.sort(np.linalg.eigvalsh(werner(F).matrix))
        expected = np.sort([F, (1 - F) / 3, (1 - F) / 3, (1 - F) / 3])
        np.testing.assert_allclose(eigenvalues, expected, atol=1e-12)


@pytest.mark.parametrize('F', [-0.1, 1.5])
def test_werner_wrong_value(F):
    """Test raising an error for F outside [0, 1]."""
    with pytest.raises(ValueError, match=f'F == {F}, must be'):
        werner(F)


def test_ext_werner():
    """Test the extended Werner states."""
    np.testing.assert_allclose(ext_werner(ExtWernerParams(b=[0, 0, 0, 0], c=[0.25] * 4)).matrix, np.eye(4) / 4)
    rho = ext_werner(ExtWernerParams(b=[0.5, 0, 0, 0], c=[0.5, 0, 0, 0])).matrix
    np.testing.assert_allclose(rho[np.ix_([0, 3], [0, 3])], [[0.75, 0.25], [0.25, 0.25]], atol=1e-15)
    np.testing.assert_allclose(rho[np.ix_([1, 2], [1, 2])], np.zeros((2, 2)), atol=1e-15)


@pytest.mark.parametrize('F', [0.0, 0.3, 0.7, 1.0])
def test_ext_werner_with_werner_params(F):
    """Test that the Werner weights give the Werner state."""
    params = ExtWernerParams(b=[(1 - F) / 3, (1 - F) / 3, (1 - F) / 3, F], c=[0, 0, 0, 0])
    np.testing.assert_allclose(ext_werner(params).matrix, werner(F).matrix, atol=1e-12)
    np.testing.assert_allclose(werner_params(F).b_, params.b_)


def test_ext_werner_wrong_params():
    """Test raising an error for non-parameter inputs."""
    with pytest.raises(TypeError, match='Parameter `p` should be an `ExtWernerParams` object'):
        ext_werner([0.25] * 8)


@pytest.mark.parametrize(
    ('b', 'c', 'match'),
    [
        ([0.5, 0.5, 0.5, 0], [0, 0, 0, 0], 'should sum to 1'),
        ([1.2, -0.2, 0, 0], [0, 0, 0, 0], 'should have nonnegative weights'),
        ([0.5, 0.5], [0, 0, 0, 0], 'should have 4 weights'),
    ],
)
def test_ext_werner_params_invalid(b, c, match):
    """Test rejecting invalid extended Werner weights."""
    with pytest.raises(ValueError, match=match):
        ExtWernerParams(b=b, c=c)


def test_ext_werner_params_attributes():
    """Test the raw and checked weights."""
    params = ExtWernerParams(b=[0.1, 0.2, 0.3, 0.4], c=(0, 0, 0, 0))
    assert params.get_params() == {'b': [0.1, 0.2, 0.3, 0.4], 'c': (0, 0, 0, 0)}
    assert params.b_.dtype == float
    assert not params.b_.flags.writeable


def test_lambda_state():
    """Test the mixtures of |Φ⁺⟩ and |00⟩."""
    np.testing.assert_allclose(lambda_state(0.0).matrix, computational(0).projector())
    np.testing.assert_allclose(lambda_state(1.0).matrix, bell('phi+').projector(), atol=1e-15)
    eigenvalues = np.sort(np.linalg.eigvalsh(lambda_state(0.5).matrix))[::-1]
    np.testing.assert_allclose(eigenvalues, [(1 + SQRT_HALF) / 2, (1 - SQRT_HALF) / 2, 0, 0], atol=1e-12)


def test_constructors_pass_validation():
    """Test that every constructed state is a valid density matrix."""
    rng = np.random.default_rng(17)
    states = [werner(F) for F in np.linspace(0, 1, 11)] + [lambda_state(lam) for lam in np.linspace(0, 1, 11)]
    for _ in range(20):
        weights = rng.dirichlet(np.ones(8))
        states.append(ext_werner(ExtWernerParams(b=weights[:4], c=weights[4:])))
    states += [random_density_matrix(rank, random_state=rank) for rank in range(1, 5)]
    for rho in states:
        validate_density(rho.matrix, tol=1e-10)


def test_random_states_reproducible():
    """Test that random states depend only on their seed."""
    np.testing.assert_array_equal(random_pure_state(3).vector, random_pure_state(3).vector)
    np.testing.assert_array_equal(random_density_matrix(2, 3).matrix, random_density_matrix(2, 3).matrix)
    assert random_density_matrix(2, random_state=4).rank == 2


@pytest.mark.parametrize('state', [bell('psi-'), werner(0.3), lambda_state(0.4)])
def test_state_file_round_trip(tmp_path, state):
    """Test writing and reading state files."""
    loaded = load_state(dump_state(state, tmp_path / 'state.json'))
    assert type(loaded) is type(state)
    expected = state.vector if isinstance(state, PureState) else state.matrix
    actual = loaded.vector if isinstance(loaded, PureState) else loaded.matrix
    np.testing.assert_allclose(actual, expected, atol=1e-15)


@pytest.mark.parametrize(
    ('document', 'match'),
    [
        ({}, 'exactly one of the keys'),
        ({'pure': [[1, 0]] * 4, 'matrix': []}, 'exactly one of the keys'),
        ({'pure': [[1, 0], [0, 0]]}, 'should have shape'),
        ({'matrix': [[['a', 0]] * 4] * 4}, 'should be \\[re, im\\] pairs'),
        ([1, 2, 3], 'exactly one of the keys'),
    ],
)
def test_parse_state_invalid(document, match):
    """Test rejecting malformed state documents."""
    with pytest.raises(StateFileError, match=match):
        parse_state(document)


def test_parse_state_invalid_state():
    """Test that well formed documents of invalid states raise validation errors."""
    with pytest.raises(NormalizationError):
        parse_state({'pure': [[1, 0], [1, 0], [0, 0], [0, 0]]})


def test_load_state_errors(tmp_path):
    """Test rejecting missing and malformed files."""
    with pytest.raises(StateFileError, match='can not be read'):
        load_state(tmp_path / 'missing.json')
    path = tmp_path / 'broken.json'
    path.write_text('{"pure": ')
    with pytest.raises(StateFileError, match='is not valid JSON'):
        load_state(path)


def test_state_file_schema(tmp_path):
    """Test the document written for a pure state."""
    path = dump_state(computational(1), tmp_path / 'state.json')
    assert json.loads(path.read_text()) == {'pure': [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}
