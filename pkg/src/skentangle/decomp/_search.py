"""Searches over the ensembles of a two-qubit state.

The searches minimize an entanglement objective over the ensembles of a state. Ensembles of
size m are parameterized by isometries V = exp(A) V₀, where A is an m x m anti-Hermitian
generator with m² real parameters and V₀ is the starting isometry. One local search starts at
every seed ensemble with A = 0, and `restarts` further searches start at random generators
with V₀ the first r columns of the identity. Every local search runs the Nelder-Mead simplex
method. When a seed already reaches the lower bound 0 of both objectives within `tol`, the
local searches are skipped. Results are merged by value and start index, so that they do not
depend on the scheduling of the restarts.
"""

# Author: Georgios Douzas <gdouzas@icloud.com> License: MIT

import logging
from dataclasses import dataclass, field
from numbers import Integral, Real
from typing import Any, Literal, NamedTuple, Self

import numpy as np
import numpy.typing as npt
from joblib import Parallel, delayed
from scipy.linalg import expm
from scipy.optimize import minimize
from sklearn.utils import check_scalar

from ..base import BaseParameters, BaseSearch
from ..linalg import ComplexMatrix
from ..measures import ProductTerm, product_terms_matrix, relative_entropy, weighted_eigenvectors
from ..states import DensityMatrix, as_density
from ._ensembles import (
    MAX_ENSEMBLE_SIZE,
    Decomposition,
    eigendecomposition_ensemble,
    isometry_from_ensemble,
    recognize_family,
    wootters_ensemble,
)
from ._objectives import ef_of_ensemble, ensemble_product_terms, mre_of_ensemble

logger = logging.getLogger(__name__)

PENALTY = 1e6
MIN_LOGIT = -30.0

Objective = Literal['mre', 'ef']


class OptimizerConfig(BaseParameters):
    """Parameters of the ensemble searches.

    Args:
        restarts:
            Number of random starts, in addition to the seed starts.

        max_iter:
            Maximum number of iterations of every local search.

        ensemble_size:
            Maximum ensemble size m, between the rank of the state and 8. If `None`,
            min(2 · rank, 8) is used.

        tol:
            Absolute convergence tolerance of the parameters and the objective. Seeds with a
            value below `tol` end the search without local searches.

        seed:
            Seed of the random starts. Random start k draws from the stream (seed, k).

        initial_step:
            Edge length of the initial simplex.

        n_jobs:
            Number of parallel jobs of the local searches. If `None`, they run sequentially.

        keep_trace:
            Whether to record the (mre, ef) pair of every evaluated ensemble.
    """

    def __init__(
        self: Self,
        restarts: int = 32,
        max_iter: int = 2000,
        ensemble_size: int | None = None,
        tol: float = 1e-8,
        seed: int = 0,
        initial_step: float = 0.5,
        n_jobs: int | None = None,
        keep_trace: bool = False,
    ) -> None:
        """Initialize the search parameters."""
        self.restarts = restarts
        self.max_iter = max_iter
        self.ensemble_size = ensemble_size
        self.tol = tol
        self.seed = seed
        self.initial_step = initial_step
        self.n_jobs = n_jobs
        self.keep_trace = keep_trace
        super().__init__()

    def _init_param(self: Self, param_name: str) -> Self:
        """Check a search parameter."""
        value = getattr(self, param_name)
        if param_name == 'restarts':
            value = check_scalar(value, param_name, Integral, min_val=1)
        elif param_name == 'max_iter':
            value = check_scalar(value, param_name, Integral, min_val=1)
        elif param_name == 'ensemble_size' and value is not None:
            value = check_scalar(value, param_name, Integral, min_val=1, max_val=MAX_ENSEMBLE_SIZE)
        elif param_name in ('tol', 'initial_step'):
            value = check_scalar(value, param_name, Real, min_val=0.0, include_boundaries='neither')
        elif param_name == 'seed':
            value = check_scalar(value, param_name, Integral, min_val=0)
        elif param_name == 'n_jobs' and value is not None:
            value = check_scalar(value, param_name, Integral)
        elif param_name == 'keep_trace':
            value = check_scalar(value, param_name, bool)
        setattr(self, f'{param_name}_', value)
        return self

    def resolve_ensemble_size(self: Self, rank: int) -> int:
        """Ensemble size of the random starts for a state of the given rank."""
        if self.ensemble_size_ is None:
            return min(2 * rank, MAX_ENSEMBLE_SIZE)
        if self.ensemble_size_ < rank:
            error_msg = (
                f'Parameter `ensemble_size` should be at least the rank {rank}. '
                f'Got {self.ensemble_size_} instead.'
            )
            raise ValueError(error_msg)
        return int(self.ensemble_size_)


@dataclass(frozen=True, eq=False)
class OptResult:
    """Result of an ensemble search.

    The best value is an upper bound of the minimum over all ensembles.
    """

    objective: str
    best_value: float
    best_decomposition: Decomposition
    seed_value: float
    evaluations: int
    converged: bool
    seed_values: dict[str, float]
    best_start: str
    restart: int
    relative_state: DensityMatrix | None = None
    trace: list[tuple[float, float]] | None = field(default=None, repr=False)


class StartResult(NamedTuple):
    """Outcome of one local search."""

    index: int
    label: str
    value: float
    decomposition: Decomposition
    evaluations: int
    converged: bool
    trace: list[tuple[float, float]]


def generator(params: npt.NDArray[np.float64], size: int) -> ComplexMatrix:
    """Anti-Hermitian matrix of `size` x `size` from size² real parameters."""
    diagonal, upper = params[:size], params[size:]
    rows, cols = np.triu_indices(size, k=1)
    half = rows.size
    strict = np.zeros((size, size), dtype=complex)
    strict[rows, cols] = upper[:half] + 1j * upper[half:]
    return 1j * np.diag(diagonal) + strict - strict.conj().T


def seed_ensembles(rho: DensityMatrix | npt.ArrayLike) -> tuple[list[tuple[str, Decomposition]], str]:
    """Seed ensembles of the searches and the name of the reference seed.

    The seeds are the eigen ensemble, the defining ensemble of a recognized Werner or extended
    Werner state and the spin-flip ensemble. The reference seed is the defining ensemble when
    the family is recognized and the eigen ensemble otherwise.
    """
    rho = as_density(rho)
    seeds = [('eigen', eigendecomposition_ensemble(rho))]
    reference = 'eigen'
    family = recognize_family(rho)
    if family is not None:
        seeds.append(family)
        reference = family[0]
    seeds.append(('wootters', wootters_ensemble(rho)))
    return seeds, reference


def _simplex(x0: npt.NDArray[np.float64], step: float) -> npt.NDArray[np.float64]:
    return np.vstack([x0, x0 + step * np.eye(x0.size)])


class _EnsembleObjective:
    """Objective of the generator parameters of a fixed starting isometry."""

    def __init__(self: Self, rho: DensityMatrix, start: ComplexMatrix, objective: Objective, keep_trace: bool) -> None:
        self.rho = rho
        self.start = start
        self.objective = objective
        self.keep_trace = keep_trace
        self.support = weighted_eigenvectors(rho)[:, : rho.rank]
        self.trace: list[tuple[float, float]] = []

    def decomposition(self: Self, params: npt.NDArray[np.float64]) -> Decomposition:
        isometry = expm(generator(params, self.start.shape[0])) @ self.start
        return Decomposition.from_vectors(self.support @ isometry.T)

    def evaluate(self: Self, decomposition: Decomposition) -> float:
        mre = ef = None
        if self.objective == 'mre' or self.keep_trace:
            mre, _ = mre_of_ensemble(self.rho, decomposition)
        if self.objective == 'ef' or self.keep_trace:
            ef = ef_of_ensemble(decomposition)
        if self.keep_trace:
            self.trace.append((mre, ef))
        value = mre if self.objective == 'mre' else ef
        return value if np.isfinite(value) else PENALTY

    def __call__(self: Self, params: npt.NDArray[np.float64]) -> float:
        return self.evaluate(self.decomposition(params))


def _local_search(
    rho: DensityMatrix,
    index: int,
    label: str,
    start: ComplexMatrix,
    x0: npt.NDArray[np.float64],
    seed_decomposition: Decomposition | None,
    objective: Objective,
    config: OptimizerConfig,
) -> StartResult:
    function = _EnsembleObjective(rho, start, objective, config.keep_trace_)
    result = minimize(
        function,
        x0,
        method='Nelder-Mead',
        options={
            'maxiter': config.max_iter_,
            'xatol': config.tol_,
            'fatol': config.tol_,
            'adaptive': True,
            'initial_simplex': _simplex(x0, config.initial_step_),
        },
    )
    decomposition = function.decomposition(result.x)
    value = function.evaluate(decomposition)
    evaluations = int(result.nfev) + 1
    if seed_decomposition is not None:
        seed_value = function.evaluate(seed_decomposition)
        evaluations += 1
        if seed_value <= value:
            decomposition, value = seed_decomposition, seed_value
    logger.debug('Start %d (%s) reached %.12g after %d evaluations.', index, label, value, evaluations)
    return StartResult(index, label, value, decomposition, evaluations, bool(result.success), function.trace)


class DecompositionSearch(BaseSearch):
    """Search for the ensemble of a state that minimizes an entanglement objective.

    Args:
        config:
            The search parameters. If `None`, the default `OptimizerConfig` is used.
    """

    objective: Objective = 'mre'

    def _default_config(self: Self) -> OptimizerConfig:
        return OptimizerConfig()

    def _check_state(self: Self, state: Any) -> Self:  # noqa: ANN401
        self.state_ = as_density(state)
        return self

    def _value(self: Self, decomposition: Decomposition) -> float:
        if self.objective == 'mre':
            return mre_of_ensemble(self.state_, decomposition)[0]
        return ef_of_ensemble(decomposition)

    def search(self: Self, state: Any) -> Self:  # noqa: ANN401
        """Search the ensembles of the state.

        Args:
            state:
                The two-qubit state.

        Returns:
            self:
                The search with the `OptResult` stored in `search_results_`.
        """
        super().search(state)
        config = self.config_
        rho = self.state_
        rank = rho.rank
        size = config.resolve_ensemble_size(rank)
        seeds, reference = seed_ensembles(rho)
        seed_values = {name: self._value(decomposition) for name, decomposition in seeds}
        if min(seed_values.values()) <= config.tol_:
            logger.info('A seed of %s reached the lower bound 0, the local searches are skipped.', self.objective)
            results = [
                self._seed_result(index, name, decomposition, seed_values[name])
                for index, (name, decomposition) in enumerate(seeds)
            ]
        else:
            results = self._local_searches(rho, size, seeds)
        best = min(results, key=lambda result: (result.value, result.index))
        relative_state = mre_of_ensemble(rho, best.decomposition)[1] if self.objective == 'mre' else None
        trace = [pair for result in results for pair in result.trace] if config.keep_trace_ else None
        self.search_results_ = OptResult(
            objective=self.objective,
            best_value=best.value,
            best_decomposition=best.decomposition,
            seed_value=seed_values[reference],
            evaluations=sum(result.evaluations for result in results),
            converged=best.converged,
            seed_values=seed_values,
            best_start=best.label,
            restart=best.index,
            relative_state=relative_state,
            trace=trace,
        )
        logger.info(
            'Search of %s reached %.12g from the %s seed value %.12g, best start %s.',
            self.objective,
            best.value,
            reference,
            seed_values[reference],
            best.label,
        )
        return self

    def _seed_result(self: Self, index: int, name: str, decomposition: Decomposition, value: float) -> StartResult:
        trace = []
        if self.config_.keep_trace_:
            trace.append((mre_of_ensemble(self.state_, decomposition)[0], ef_of_ensemble(decomposition)))
        return StartResult(index, name, value, decomposition, 1, True, trace)

    def _local_searches(
        self: Self,
        rho: DensityMatrix,
        size: int,
        seeds: list[tuple[str, Decomposition]],
    ) -> list[StartResult]:
        config = self.config_
        rank = rho.rank
        starts = []
        for name, decomposition in seeds:
            seed_size = max(size, len(decomposition))
            start = isometry_from_ensemble(rho, decomposition, seed_size)
            starts.append((name, start, np.zeros(seed_size**2), decomposition))
        identity = np.eye(size, rank, dtype=complex)
        for restart in range(config.restarts_):
            generator_params = np.random.default_rng([config.seed_, restart]).normal(size=size**2)
            starts.append((f'random-{restart}', identity, generator_params, None))
        results = Parallel(n_jobs=config.n_jobs_)(
            delayed(_local_search)(rho, index, label, start, x0, seed_decomposition, self.objective, config)
            for index, (label, start, x0, seed_decomposition) in enumerate(starts)
        )
        return list(results)


class MRESearch(DecompositionSearch):
    """Search for the ensemble that minimizes the modified relative entropy."""

    objective: Objective = 'mre'


class EFSearch(DecompositionSearch):
    """Search for the ensemble that minimizes the average pure-state entanglement."""

    objective: Objective = 'ef'


def optimize_mre(rho: DensityMatrix | npt.ArrayLike, cfg: OptimizerConfig | None = None) -> OptResult:
    """Upper bound of the modified relative entropy from a search over the ensembles of the state."""
    return MRESearch(cfg).search(rho).search_results_


def optimize_ef(rho: DensityMatrix | npt.ArrayLike, cfg: OptimizerConfig | None = None) -> OptResult:
    """Upper bound of the entanglement of formation from a search over the ensembles of the state."""
    return EFSearch(cfg).search(rho).search_results_


@dataclass(frozen=True, eq=False)
class SeparableResult:
    """Result of the search over separable states."""

    value: float
    terms: list[ProductTerm]
    evaluations: int


def _angles(bloch: npt.NDArray[np.float64]) -> tuple[float, float]:
    return float(np.arccos(np.clip(bloch[2], -1.0, 1.0))), float(np.arctan2(bloch[1], bloch[0]))


def _bloch(theta: float, phi: float) -> npt.NDArray[np.float64]:
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def terms_to_params(terms: list[ProductTerm], n_terms: int) -> npt.NDArray[np.float64]:
    """Softmax logits and Bloch angles of at most `n_terms` product terms."""
    params = np.zeros((n_terms, 5))
    params[:, 0] = MIN_LOGIT
    for row, term in zip(params, terms, strict=False):
        row[0] = np.log(term.weight)
        row[1:3] = _angles(term.bloch_a)
        row[3:5] = _angles(term.bloch_b)
    return params.ravel()


def params_to_terms(params: npt.NDArray[np.float64]) -> list[ProductTerm]:
    """Product terms from softmax logits and Bloch angles."""
    rows = params.reshape(-1, 5)
    logits = rows[:, 0] - rows[:, 0].max()
    weights = np.exp(logits) / np.exp(logits).sum()
    return [
        ProductTerm(float(weight), _bloch(*row[1:3]), _bloch(*row[3:5]))
        for weight, row in zip(weights, rows, strict=True)
    ]


class SeparableSearch(BaseSearch):
    """Search for the separable state with the smallest relative entropy to a state.

    Separable states are mixtures of at most `n_terms` products of pure qubit states,
    parameterized by softmax weights and Bloch angles. The search starts from the total
    relative states of the eigen, family and spin-flip ensembles and from `restarts`
    random parameters.

    Args:
        config:
            The search parameters. If `None`, the default `OptimizerConfig` is used.

        n_terms:
            Maximum number of product terms.
    """

    def __init__(self: Self, config: OptimizerConfig | None = None, n_terms: int = MAX_ENSEMBLE_SIZE) -> None:
        """Initialize the search with its parameters."""
        super().__init__(config)
        self.n_terms = n_terms

    def _default_config(self: Self) -> OptimizerConfig:
        return OptimizerConfig()

    def _check_state(self: Self, state: Any) -> Self:  # noqa: ANN401
        self.state_ = as_density(state)
        self.n_terms_ = check_scalar(self.n_terms, 'n_terms', Integral, min_val=1, max_val=MAX_ENSEMBLE_SIZE)
        return self

    def _objective(self: Self, params: npt.NDArray[np.float64]) -> float:
        sigma = DensityMatrix(product_terms_matrix(params_to_terms(params)), check=False)
        value = relative_entropy(self.state_, sigma)
        return value if np.isfinite(value) else PENALTY

    def _seed_terms(self: Self) -> list[tuple[str, list[ProductTerm]]]:
        ensembles, _ = seed_ensembles(self.state_)
        seeds = []
        for name, decomposition in ensembles:
            terms = ensemble_product_terms(decomposition)
            if len(terms) <= self.n_terms_:
                seeds.append((name, terms))
            else:
                logger.debug('Skipped the %s seed with %d product terms.', name, len(terms))
        return seeds

    def search(self: Self, state: Any) -> Self:  # noqa: ANN401
        """Search the separable states.

        Args:
            state:
                The two-qubit state.

        Returns:
            self:
                The search with the `SeparableResult` stored in `search_results_`.
        """
        super().search(state)
        config = self.config_
        starts = [terms_to_params(terms, self.n_terms_) for _, terms in self._seed_terms()]
        starts += [
            np.random.default_rng([config.seed_, restart]).normal(size=5 * self.n_terms_)
            for restart in range(config.restarts_)
        ]
        candidates = []
        evaluations = 0
        for index, x0 in enumerate(starts):
            x0_value = self._objective(x0)
            result = minimize(
                self._objective,
                x0,
                method='Nelder-Mead',
                options={
                    'maxiter': config.max_iter_,
                    'xatol': config.tol_,
                    'fatol': config.tol_,
                    'adaptive': True,
                    'initial_simplex': _simplex(x0, config.initial_step_),
                },
            )
            evaluations += int(result.nfev) + 1
            value, params = (float(result.fun), result.x) if result.fun < x0_value else (x0_value, x0)
            candidates.append((value, index, params))
        value, index, params = min(candidates, key=lambda candidate: candidate[:2])
        terms = [term for term in params_to_terms(params) if term.weight > 1e-12]
        self.search_results_ = SeparableResult(value=max(value, 0.0), terms=terms, evaluations=evaluations)
        logger.info('Separable search reached %.12g from start %d.', value, index)
        return self


def re_upper_bound(rho: DensityMatrix | npt.ArrayLike, cfg: OptimizerConfig | None = None, terms: int = 8) -> float:
    """Upper bound of the relative entropy of entanglement.

    Args:
        rho:
            The two-qubit state.

        cfg:
            The search parameters. If `None`, the default `OptimizerConfig` is used.

        terms:
            Maximum number of product terms of the separable states.

    Returns:
        value:
            The smallest relative entropy S(ρ‖σ) found over separable states σ, in bits.
    """
    return SeparableSearch(cfg, n_terms=terms).search(rho).search_results_.value

