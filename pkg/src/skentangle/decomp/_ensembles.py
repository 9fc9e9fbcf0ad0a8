"""Pure-state ensembles of two-qubit states.

Every ensemble {p_i, ψ_i} of a state ρ with r nonzero eigenpairs (λ_j, v_j) arises from an
m x r isometry V as √p_i ψ_i = Σ_j V[i, j] √λ_j v_j. This module implements that
parameterization in both directions, the ensembles that define the Werner, extended Werner
and λ-state families, the constructive ensemble of the spin-flip construction and the
recognition of the Werner and extended Werner families from a matrix.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from numbers import Real
from typing import Literal, Self

import numpy as np
import numpy.typing as npt
from scipy.linalg import eigh, null_space, polar
from sklearn.utils import check_scalar

from ..exceptions import DecompositionError
from ..linalg import ComplexMatrix
from ..measures import spin_flip_overlaps, weighted_eigenvectors
from ..states import (
    BELL_KINDS,
    DensityMatrix,
    ExtWernerParams,
    PureState,
    as_density,
    bell,
    computational,
    werner,
)

logger = logging.getLogger(__name__)

WEIGHT_SUM_TOL = 1e-10
RESYNTHESIS_TOL = 1e-9
ISOMETRY_TOL = 1e-10
SUPPORT_TOL = 1e-12
FAMILY_TOL = 1e-10
MAX_ENSEMBLE_SIZE = 8
HADAMARD = np.array([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], dtype=float) / 2

WernerForm = Literal['bell', 'isotropic', 'product']


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Weighted ensemble {p_i, ψ_i} of pure states.

    Args:
        weights:
            Positive weights summing to one.

        states:
            The pure states, aligned with `weights`.
    """

    weights: npt.NDArray[np.float64]
    states: tuple[PureState, ...]

    def __post_init__(self: Self) -> None:
        """Check the weights."""
        weights = np.asarray(self.weights, dtype=float)
        if weights.ndim != 1 or weights.size != len(self.states) or weights.size == 0:
            error_msg = (
                f'Decomposition should have one weight per state. Got {weights.size} weights '
                f'and {len(self.states)} states instead.'
            )
            raise DecompositionError(error_msg)
        if np.any(weights <= 0):
            error_msg = f'Decomposition weights should be positive. Got {weights.tolist()} instead.'
            raise DecompositionError(error_msg)
        if abs(weights.sum() - 1.0) > WEIGHT_SUM_TOL:
            error_msg = f'Decomposition weights should sum to 1. Got {weights.sum():.12g} instead.'
            raise DecompositionError(error_msg)
        weights.setflags(write=False)
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def from_vectors(cls: type[Self], vectors: ComplexMatrix, drop_tol: float = SUPPORT_TOL) -> Self:
        """Create an ensemble from subnormalized vectors √p_i ψ_i stored as columns.

        Vectors with squared norm below `drop_tol` are dropped.
        """
        weights = np.einsum('ij,ij->j', vectors.conj(), vectors).real
        keep = weights > drop_tol
        states = tuple(PureState.from_amplitudes(vector) for vector in vectors[:, keep].T)
        return cls(weights=weights[keep], states=states)

    @property
    def terms(self: Self) -> list[tuple[float, PureState]]:
        """The (weight, state) pairs."""
        return list(zip(self.weights.tolist(), self.states, strict=True))

    def to_matrix(self: Self) -> ComplexMatrix:
        """The mixture Σ p_i |ψ_i⟩⟨ψ_i|."""
        vectors = np.column_stack([state.vector for state in self.states])
        return (vectors * self.weights) @ vectors.conj().T

    def check_decomposes(self: Self, rho: DensityMatrix, tol: float = RESYNTHESIS_TOL) -> Self:
        """Check that the mixture resynthesizes the state within `tol` entrywise."""
        deviation = float(np.max(np.abs(self.to_matrix() - rho.matrix)))
        if deviation > tol:
            error_msg = f'Decomposition does not resynthesize the state. Got maximum deviation {deviation:.3e}.'
            raise DecompositionError(error_msg)
        return self

    def __len__(self: Self) -> int:
        """Number of terms."""
        return len(self.states)

    def __iter__(self: Self) -> Iterator[tuple[float, PureState]]:
        """Iterate over the (weight, state) pairs."""
        return iter(self.terms)

    def __repr__(self: Self) -> str:
        """Representation of the decomposition."""
        return f'{self.__class__.__name__}(size={len(self)}, weights={np.round(self.weights, 6).tolist()})'


def _support(rho: DensityMatrix) -> ComplexMatrix:
    """Weighted eigenvectors √λ_j v_j of the nonzero eigenpairs."""
    return weighted_eigenvectors(rho)[:, : rho.rank]


def eigendecomposition_ensemble(rho: DensityMatrix | npt.ArrayLike) -> Decomposition:
    """Ensemble of the eigenpairs with eigenvalue above 1e-12."""
    rho = as_density(rho)
    eigensystem = rho.eigensystem
    keep = eigensystem.eigenvalues > SUPPORT_TOL
    states = tuple(PureState.from_amplitudes(vector) for vector in eigensystem.eigenvectors[:, keep].T)
    return Decomposition(weights=eigensystem.eigenvalues[keep], states=states)


def check_isometry(V: npt.ArrayLike, rank: int) -> ComplexMatrix:
    """Check that `V` is an m x rank isometry with m ≤ 8."""
    isometry = np.array(V, dtype=complex)
    if isometry.ndim != 2 or isometry.shape[1] != rank or not rank <= isometry.shape[0] <= MAX_ENSEMBLE_SIZE:
        error_msg = (
            f'Isometry should have shape (m, {rank}) with {rank} <= m <= {MAX_ENSEMBLE_SIZE}. '
            f'Got shape {isometry.shape} instead.'
        )
        raise DecompositionError(error_msg)
    deviation = float(np.max(np.abs(isometry.conj().T @ isometry - np.eye(rank))))
    if deviation > ISOMETRY_TOL:
        error_msg = f'Isometry columns should be orthonormal. Got deviation {deviation:.3e} from the identity.'
        raise DecompositionError(error_msg)
    return isometry


def ensemble_from_isometry(rho: DensityMatrix | npt.ArrayLike, V: npt.ArrayLike) -> Decomposition:
    """Ensemble √p_i ψ_i = Σ_j V[i, j] √λ_j v_j over the nonzero eigenpairs of the state.

    Args:
        rho:
            The two-qubit state with rank r.

        V:
            An m x r complex matrix with orthonormal columns.

    Returns:
        decomposition:
            The ensemble of at most m terms. Terms with weight below 1e-12 are dropped.
    """
    rho = as_density(rho)
    isometry = check_isometry(V, rho.rank)
    return Decomposition.from_vectors(_support(rho) @ isometry.T)


def isometry_from_ensemble(
    rho: DensityMatrix | npt.ArrayLike,
    decomposition: Decomposition,
    size: int | None = None,
) -> ComplexMatrix:
    """Isometry V[i, j] = ⟨v_j|√p_i ψ_i⟩ / √λ_j that generates an ensemble of the state.

    Args:
        rho:
            The two-qubit state.

        decomposition:
            An ensemble of the state.

        size:
            The number of rows m of the isometry. Missing rows are zero. If `None`, the size
            of the ensemble is used.

    Returns:
        isometry:
            The m x r isometry, projected onto the nearest isometry.
    """
    rho = as_density(rho)
    decomposition.check_decomposes(rho)
    size = len(decomposition) if size is None else size
    if size < len(decomposition):
        error_msg = f'Parameter `size` should be at least {len(decomposition)}. Got {size} instead.'
        raise DecompositionError(error_msg)
    eigensystem = rho.eigensystem
    rank = rho.rank
    vectors = np.column_stack([np.sqrt(p) * state.vector for p, state in decomposition])
    isometry = np.zeros((size, rank), dtype=complex)
    isometry[: len(decomposition)] = (vectors.T @ eigensystem.eigenvectors[:, :rank].conj()) / np.sqrt(
        eigensystem.eigenvalues[:rank],
    )
    isometry, _ = polar(isometry)
    return check_isometry(isometry, rank)


def _takagi_vectors(tau: ComplexMatrix) -> tuple[npt.NDArray[np.float64], ComplexMatrix]:
    """Unitary Q and nonnegative σ with τ = Q diag(σ) Qᵀ, σ in descending order."""
    size = tau.shape[0]
    real_form = np.block([[tau.real, tau.imag], [tau.imag, -tau.real]])
    eigenvalues, eigenvectors = eigh(real_form)
    positive = eigenvalues > SUPPORT_TOL
    values = eigenvalues[positive]
    vectors = eigenvectors[:size, positive] + 1j * eigenvectors[size:, positive]
    if values.size < size:
        complement = null_space(vectors.conj().T) if values.size else np.eye(size, dtype=complex)
        vectors = np.column_stack([vectors, complement])
        values = np.concatenate([values, np.zeros(size - values.size)])
    order = np.argsort(-values, kind='stable')
    return values[order], vectors[:, order]


def _closing_phases(lambdas: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Phases φ with Σ λ_j exp(iφ_j) = 0 for λ₁ ≥ λ₂ ≥ λ₃ ≥ λ₄ and λ₁ ≤ λ₂ + λ₃ + λ₄."""
    l1, l2, l3, l4 = lambdas
    phases = np.zeros(4)
    radius = max(l1 - l2, l3 - l4, 0.0)
    if l1 > 0 and l2 > 0:
        phases[1] = np.arccos(np.clip((radius**2 - l1**2 - l2**2) / (2 * l1 * l2), -1.0, 1.0))
    target = -(l1 + l2 * np.exp(1j * phases[1]))
    if l3 > 0:
        cos_beta = (radius**2 + l3**2 - l4**2) / (2 * radius * l3) if radius > 0 else 0.0
        phases[2] = np.angle(target) + np.arccos(np.clip(cos_beta, -1.0, 1.0)) if radius > 0 else 0.0
    remainder = target - l3 * np.exp(1j * phases[2])
    if l4 > 0:
        phases[3] = np.angle(remainder)
    return phases


def _zero_diagonal_rotation(matrix: npt.NDArray[np.float64], tol: float) -> npt.NDArray[np.float64]:
    """Real orthogonal O such that O M Oᵀ has a zero diagonal, for a real symmetric M with zero trace."""
    size = matrix.shape[0]
    current = matrix.copy()
    rotation = np.eye(size)
    for _ in range(size - 1):
        diagonal = np.diag(current)
        nonzero = np.flatnonzero(np.abs(diagonal) > tol)
        if nonzero.size == 0:
            break
        i = nonzero[0]
        opposite = nonzero[np.sign(diagonal[nonzero]) != np.sign(diagonal[i])]
        if opposite.size == 0:
            break
        j = opposite[0]
        discriminant = current[i, j] ** 2 - current[i, i] * current[j, j]
        t = (-current[i, j] + np.sqrt(discriminant)) / current[j, j]
        c = 1 / np.sqrt(1 + t**2)
        s = t * c
        givens = np.eye(size)
        givens[i, i], givens[i, j], givens[j, i], givens[j, j] = c, s, -s, c
        current = givens @ current @ givens.T
        rotation = givens @ rotation
    return rotation


def wootters_ensemble(rho: DensityMatrix | npt.ArrayLike) -> Decomposition:
    """Ensemble whose average pure-state entanglement equals the entanglement of formation.

    The weighted eigenvectors are rotated into vectors x_i with ⟨x_i|x̃_j⟩ = λ_i δ_ij, where
    x̃ = σ_y ⊗ σ_y x*. For zero concurrence the x_i are mixed with phases that close the
    polygon of the λ's, which makes every member a product state. Otherwise a real orthogonal
    mixing gives every member the concurrence of the state.

    Args:
        rho:
            The two-qubit state.

    Returns:
        decomposition:
            An ensemble of at most four members.
    """
    rho = as_density(rho)
    support = _support(rho)
    tau = spin_flip_overlaps(rho)[: rho.rank, : rho.rank]
    lambdas, takagi = _takagi_vectors(tau)
    vectors = np.zeros((4, 4), dtype=complex)
    vectors[:, : rho.rank] = support @ takagi
    padded = np.zeros(4)
    padded[: rho.rank] = lambdas
    value = padded[0] - padded[1:].sum()
    if value <= SUPPORT_TOL:
        phases = np.exp(-0.5j * _closing_phases(padded))
        mixed = (vectors * phases) @ HADAMARD.T
        logger.debug('Spin-flip ensemble with zero concurrence and lambdas %s.', np.round(padded, 12).tolist())
    else:
        flipped = vectors * np.array([1, 1j, 1j, 1j])
        gram = (flipped.conj().T @ flipped).real
        target = np.diag(padded * np.array([1, -1, -1, -1])) - value * gram
        rotation = _zero_diagonal_rotation(target, tol=1e-14)
        mixed = flipped @ rotation.T
        logger.debug('Spin-flip ensemble with concurrence %.12g.', value)
    return Decomposition.from_vectors(mixed)


def werner_ensemble(F: float, form: WernerForm = 'bell') -> Decomposition:
    """Ensembles of the Werner state.

    Args:
        F:
            The singlet weight.

        form:
            `'bell'` mixes the four Bell states. `'isotropic'` mixes the singlet with weight
            (4F − 1)/3 and the four computational states with weight (1 − F)/3 each, which
            requires F ≥ 1/4. `'product'` mixes |Ψ⁺⟩ with weight (1 − 4F)/3, |00⟩ and |11⟩
            with weight (1 − F)/3 each and |01⟩ and |10⟩ with weight F each, which requires
            F ≤ 1/4.

    Returns:
        decomposition:
            The ensemble, without zero-weight members.
    """
    F = float(check_scalar(F, 'F', Real, min_val=0.0, max_val=1.0))
    rest = (1 - F) / 3
    if form == 'bell':
        terms = [(rest, bell('phi+')), (rest, bell('phi-')), (rest, bell('psi+')), (F, bell('psi-'))]
    elif form == 'isotropic':
        if F < 0.25:
            error_msg = f'The isotropic form requires F >= 0.25. Got {F} instead.'
            raise ValueError(error_msg)
        terms = [((4 * F - 1) / 3, bell('psi-'))] + [(rest, computational(index)) for index in range(4)]
    elif form == 'product':
        if F > 0.25:
            error_msg = f'The product form requires F <= 0.25. Got {F} instead.'
            raise ValueError(error_msg)
        terms = [
            ((1 - 4 * F) / 3, bell('psi+')),
            (rest, computational(0)),
            (F, computational(1)),
            (F, computational(2)),
            (rest, computational(3)),
        ]
    else:
        error_msg = f'Parameter `form` should be one of `bell`, `isotropic` or `product`. Got `{form}` instead.'
        raise ValueError(error_msg)
    return _from_terms(terms)


def _from_terms(terms: list[tuple[float, PureState]]) -> Decomposition:
    kept = [(weight, state) for weight, state in terms if weight > SUPPORT_TOL]
    weights = np.array([weight for weight, _ in kept])
    return Decomposition(weights=weights, states=tuple(state for _, state in kept))


def ext_werner_ensemble(p: ExtWernerParams) -> Decomposition:
    """Ensemble of the four Bell states with weights b and the computational states with weights c."""
    bell_terms = [(weight, bell(kind)) for weight, kind in zip(p.b_.tolist(), BELL_KINDS, strict=True)]
    product_terms = [(weight, computational(index)) for index, weight in enumerate(p.c_.tolist())]
    return _from_terms(bell_terms + product_terms)


def lambda_ensemble(lam: float) -> Decomposition:
    """Ensemble λ|Φ⁺⟩ + (1 − λ)|00⟩ of the λ-state."""
    return _from_terms([(lam, bell('phi+')), (1 - lam, computational(0))])


def _block_weights(diagonal: tuple[float, float], coherence: complex) -> tuple[float, float, float, float] | None:
    """Bell weights (b_plus, b_minus) and product weights (c_first, c_last) of a 2x2 block."""
    if abs(coherence.imag) > FAMILY_TOL:
        return None
    offset = coherence.real
    first, last = diagonal[0] - abs(offset), diagonal[1] - abs(offset)
    if min(first, last) < -FAMILY_TOL:
        return None
    b_plus, b_minus = (2 * offset, 0.0) if offset >= 0 else (0.0, -2 * offset)
    return b_plus, b_minus, max(first, 0.0), max(last, 0.0)


def ext_werner_params_of(rho: DensityMatrix | npt.ArrayLike) -> ExtWernerParams | None:
    """Extended Werner weights of a state, with the largest product weights, or `None`."""
    matrix = as_density(rho).matrix
    allowed = np.eye(4, dtype=bool)
    allowed[0, 3] = allowed[3, 0] = allowed[1, 2] = allowed[2, 1] = True
    if np.max(np.abs(matrix[~allowed])) > FAMILY_TOL:
        return None
    outer = _block_weights((matrix[0, 0].real, matrix[3, 3].real), complex(matrix[0, 3]))
    inner = _block_weights((matrix[1, 1].real, matrix[2, 2].real), complex(matrix[1, 2]))
    if outer is None or inner is None:
        return None
    b = np.array([outer[0], outer[1], inner[0], inner[1]])
    c = np.array([outer[2], inner[2], inner[3], outer[3]])
    total = b.sum() + c.sum()
    return ExtWernerParams(b=b / total, c=c / total)


def recognize_family(rho: DensityMatrix | npt.ArrayLike) -> tuple[str, Decomposition] | None:
    """Recognize a Werner or an extended Werner state.

    Args:
        rho:
            The two-qubit state.

    Returns:
        family:
            The family name, `'werner'` or `'ext_werner'`, and its defining ensemble, or `None`
            when the state belongs to neither family.
    """
    rho = as_density(rho)
    psi_minus = bell('psi-').vector
    F = float(np.clip(np.vdot(psi_minus, rho.matrix @ psi_minus).real, 0.0, 1.0))
    if np.allclose(rho.matrix, werner(F).matrix, rtol=0.0, atol=FAMILY_TOL):
        logger.debug('Recognized a Werner state with F=%.12g.', F)
        return 'werner', werner_ensemble(F)
    params = ext_werner_params_of(rho)
    if params is None:
        return None
    logger.debug('Recognized an extended Werner state with b=%s and c=%s.', params.b_.tolist(), params.c_.tolist())
    return 'ext_werner', ext_werner_ensemble(params)
