"""Test the measures module."""

import logging

import numpy as np
import pytest
from skentangle.exceptions import DimensionError
from skentangle.linalg import partial_trace
from skentangle.measures import (
    binary_entropy,
    bloch_projector,
    bloch_vector,
    concurrence,
    ef_pure,
    ef_wootters,
    min_partial_transpose_eigenvalue,
    pauli_coefficients,
    polarization_vectors,
    ppt_separable,
    reduced_polarization,
    relative_entropy,
    relative_state_pure,
    relative_state_terms,
    schmidt_decomposition,
    schmidt_relative_state,
    von_neumann_entropy,
)
from skentangle.states import (
    BELL_KINDS,
    DensityMatrix,
    PureState,
    bell,
    computational,
    product_state,
    random_density_matrix,
    random_pure_state,
    werner,
)

SCHMIDT_STATE = PureState([np.sqrt(0.8), 0, 0, np.sqrt(0.2)])


def _random_pure_states(seed, size):
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=(size, 4)) + 1j * rng.normal(size=(size, 4))
    return [PureState.from_amplitudes(vector) for vector in amplitudes]


@pytest.mark.parametrize(
    ('state', 'xi_a', 'xi_b'),
    [
        (computational(0), [0, 0, 1], [0, 0, 1]),
        (bell('phi+'), [0, 0, 0], [0, 0, 0]),
        (bell('psi-'), [0, 0, 0], [0, 0, 0]),
        (SCHMIDT_STATE, [0, 0, 0.6], [0, 0, 0.6]),
    ],
)
def test_polarization_vectors(state, xi_a, xi_b):
    """Test the polarization vectors of pure states."""
    actual_a, actual_b = polarization_vectors(state)
    np.testing.assert_allclose(actual_a, xi_a, atol=1e-12)
    np.testing.assert_allclose(actual_b, xi_b, atol=1e-12)


def test_polarization_vectors_bounded():
    """Test that polarization vectors of mixed states have length at most one."""
    for seed in range(50):
        xi_a, xi_b = polarization_vectors(random_density_matrix(random_state=seed))
        assert np.linalg.norm(xi_a) <= 1 + 1e-10
        assert np.linalg.norm(xi_b) <= 1 + 1e-10


@pytest.mark.parametrize(
    ('rho', 'nonzero'),
    [
        (np.eye(4) / 4, {(0, 0): 0.25}),
        (bell('phi+').projector(), {(0, 0): 0.25, (1, 1): 0.25, (2, 2): -0.25, (3, 3): 0.25}),
        (computational(0).projector(), {(0, 0): 0.25, (0, 3): 0.25, (3, 0): 0.25, (3, 3): 0.25}),
    ],
)
def test_pauli_coefficients(rho, nonzero):
    """Test the Pauli expansion of simple states."""
    expected = np.zeros((4, 4))
    for index, value in nonzero.items():
        expected[index] = value
    np.testing.assert_allclose(pauli_coefficients(rho).a, expected, atol=1e-12)


def test_pauli_coefficients_reconstruction():
    """Test that the Pauli expansion rebuilds random states."""
    for seed in range(50):
        rho = random_density_matrix(random_state=seed)
        coefficients = pauli_coefficients(rho)
        assert coefficients.a[0, 0] == pytest.approx(0.25, abs=1e-12)
        np.testing.assert_allclose(coefficients.reconstruct(), rho.matrix, atol=1e-10)


def test_polarization_identities_of_pure_states():
    """Test that ξ_A = 4 a ξ_B, ξ_B = 4 aᵀ ξ_A and |ξ|² = 1 − 4|ad − bc|² for pure states."""
    for psi in _random_pure_states(19, 1000):
        a = pauli_coefficients(psi).a[1:, 1:]
        xi_a, xi_b = polarization_vectors(psi)
        np.testing.assert_allclose(xi_a, 4 * a @ xi_b, atol=1e-10)
        np.testing.assert_allclose(4 * xi_a @ a, xi_b, atol=1e-10)
        amp_a, amp_b, amp_c, amp_d = psi.amplitudes
        norm = 1 - 4 * abs(amp_a * amp_d - amp_b * amp_c) ** 2
        assert np.dot(xi_a, xi_a) == pytest.approx(norm, abs=1e-10)
        assert np.dot(xi_b, xi_b) == pytest.approx(norm, abs=1e-10)


def test_reduced_polarization_and_bloch_vectors():
    """Test the one-qubit Bloch vectors."""
    np.testing.assert_allclose(reduced_polarization(np.diag([0.8, 0.2])), [0, 0, 0.6], atol=1e-15)
    np.testing.assert_allclose(bloch_vector(np.array([1, 1j]) / np.sqrt(2)), [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(bloch_projector([0, 0, -1]), np.diag([0, 1]))


@pytest.mark.parametrize(
    ('rho', 'entropy'),
    [
        (computational(0), 0.0),
        (bell('phi+'), 0.0),
        (np.eye(4) / 4, 2.0),
        (werner(0.5), 1.792481250360578),
        (np.eye(2) / 2, 1.0),
    ],
)
def test_von_neumann_entropy(rho, entropy):
    """Test the von Neumann entropy in bits."""
    assert von_neumann_entropy(rho) == pytest.approx(entropy, abs=1e-12)


@pytest.mark.parametrize(('x', 'entropy'), [(0.0, 0.0), (0.5, 1.0), (0.8, 0.721928094887), (1.0, 0.0)])
def test_binary_entropy(x, entropy):
    """Test the binary entropy in bits."""
    assert binary_entropy(x) == pytest.approx(entropy, abs=1e-12)


def test_relative_entropy_examples():
    """Test the relative entropy on states with known values."""
    phi_plus = bell('phi+')
    assert relative_entropy(phi_plus, np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)
    assert relative_entropy(phi_plus, relative_state_pure(phi_plus)) == pytest.approx(1.0, abs=1e-12)
    assert relative_entropy(computational(0), computational(1)) == np.inf


def test_relative_entropy_of_identical_states():
    """Test that the relative entropy of a state to itself vanishes."""
    for seed in range(50):
        rho = random_density_matrix(random_state=seed)
        assert relative_entropy(rho, rho) == pytest.approx(0.0, abs=1e-9)
        assert relative_entropy(rho, np.eye(4) / 4) >= 0


def test_relative_entropy_dimension_mismatch():
    """Test raising an error for states of different dimension."""
    with pytest.raises(DimensionError, match='should have the same dimension'):
        relative_entropy(np.eye(4) / 4, np.eye(2) / 2)


def test_relative_entropy_within_tolerance_not_logged(caplog):
    """Test that small negative values are clamped without warnings."""
    with caplog.at_level(logging.WARNING):
        value = relative_entropy(werner(0.3), werner(0.3))
    assert value >= 0
    assert not caplog.records


@pytest.mark.parametrize(
    ('state', 'expected'),
    [
        (computational(0), np.diag([1, 0, 0, 0])),
        (bell('phi+'), np.diag([0.5, 0, 0, 0.5])),
        (bell('phi-'), np.diag([0.5, 0, 0, 0.5])),
        (bell('psi+'), np.diag([0, 0.5, 0.5, 0])),
        (bell('psi-'), np.diag([0, 0.5, 0.5, 0])),
        (SCHMIDT_STATE, np.diag([0.8, 0, 0, 0.2])),
    ],
)
def test_relative_state_pure(state, expected):
    """Test the relative states of product, Bell and Schmidt form states."""
    np.testing.assert_allclose(relative_state_pure(state).matrix, expected, atol=1e-12)


def test_relative_state_terms_weights():
    """Test the weights of the product terms of the relative state."""
    weights = [term.weight for term in relative_state_terms(SCHMIDT_STATE)]
    np.testing.assert_allclose(weights, [0.8, 0.2], atol=1e-12)
    assert len(relative_state_terms(computational(3))) == 1


def test_relative_state_matches_schmidt_pinch():
    """Test that the polarization formula equals the Schmidt pinch for states with nonzero polarization."""
    for psi in _random_pure_states(23, 1000):
        if np.linalg.norm(polarization_vectors(psi)[0]) > 1e-6:
            np.testing.assert_allclose(relative_state_pure(psi).matrix, schmidt_relative_state(psi).matrix, atol=1e-9)


def test_relative_state_of_pure_states():
    """Test that the relative entropy to the relative state equals the entanglement of pure states."""
    for psi in _random_pure_states(29, 1000):
        relative_state = relative_state_pure(psi)
        reduced_entropy = von_neumann_entropy(partial_trace(psi.projector(), keep='B'))
        assert relative_entropy(psi, relative_state) == pytest.approx(reduced_entropy, abs=1e-9)
        assert relative_entropy(psi, relative_state) == pytest.approx(ef_pure(psi), abs=1e-9)
        assert ppt_separable(relative_state)
        DensityMatrix(relative_state.matrix)


def test_relative_state_of_product_states():
    """Test that product states are their own relative states."""
    for seed in range(100):
        rng = np.random.default_rng(seed)
        alpha, beta = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        psi = product_state(alpha / np.linalg.norm(alpha), beta / np.linalg.norm(beta))
        np.testing.assert_allclose(relative_state_pure(psi).matrix, psi.projector(), atol=1e-10)


def test_schmidt_decomposition():
    """Test the Schmidt coefficients and the rebuilt amplitudes."""
    psi = random_pure_state(31)
    schmidt = schmidt_decomposition(psi)
    assert np.all(np.diff(schmidt.coefficients) <= 0)
    assert np.sum(schmidt.coefficients**2) == pytest.approx(1.0)
    np.testing.assert_allclose(schmidt.to_vector(), psi.vector, atol=1e-12)


@pytest.mark.parametrize(
    ('state', 'entanglement'),
    [(bell('phi+'), 1.0), (bell('psi-'), 1.0), (computational(2), 0.0), (SCHMIDT_STATE, 0.721928094887)],
)
def test_ef_pure(state, entanglement):
    """Test the entanglement of pure states."""
    assert ef_pure(state) == pytest.approx(entanglement, abs=1e-12)


@pytest.mark.parametrize(
    ('rho', 'expected_concurrence', 'expected_ef'),
    [
        (bell('phi+'), 1.0, 1.0),
        (werner(0.5), 0.0, 0.0),
        (werner(1.0), 1.0, 1.0),
        (computational(1), 0.0, 0.0),
        (SCHMIDT_STATE, 0.8, 0.721928094887),
    ],
)
def test_ef_wootters(rho, expected_concurrence, expected_ef):
    """Test the concurrence and the entanglement of formation."""
    value, ef = ef_wootters(rho)
    assert value == pytest.approx(expected_concurrence, abs=1e-9)
    assert ef == pytest.approx(expected_ef, abs=1e-9)


def test_concurrence_of_werner_states():
    """Test that the concurrence of Werner states is max(0, 2F − 1)."""
    for F in np.linspace(0, 1, 21):
        assert concurrence(werner(F)) == pytest.approx(max(0.0, 2 * F - 1), abs=1e-9)


def test_concurrence_of_separable_werner_states_is_zero():
    """Test that separable Werner states have a concurrence of exactly 0."""
    for F in np.arange(0, 51) / 100:
        assert concurrence(werner(F)) == 0.0


@pytest.mark.parametrize(
    ('rho', 'separable'),
    [
        (computational(0), True),
        (np.eye(4) / 4, True),
        (werner(0.4), True),
        (werner(0.5), True),
        (werner(0.6), False),
        *[(bell(kind), False) for kind in BELL_KINDS],
    ],
)
def test_ppt_separable(rho, separable):
    """Test the positive partial transpose test."""
    assert ppt_separable(rho) is separable


def test_min_partial_transpose_eigenvalue():
    """Test the smallest eigenvalue of the partial transpose of a Bell state."""
    assert min_partial_transpose_eigenvalue(bell('psi+')) == pytest.approx(-0.5)
