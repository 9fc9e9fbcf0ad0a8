"""Pure-state ensembles, their entanglement objectives and the searches over them."""

from ._ensembles import (
    Decomposition,
    check_isometry,
    eigendecomposition_ensemble,
    ensemble_from_isometry,
    ext_werner_ensemble,
    ext_werner_params_of,
    isometry_from_ensemble,
    lambda_ensemble,
    recognize_family,
    werner_ensemble,
    wootters_ensemble,
)
from ._objectives import (
    ef_of_decomposition,
    ef_of_ensemble,
    ensemble_product_terms,
    mre_of_decomposition,
    mre_of_ensemble,
    total_relative_state,
)
from ._search import (
    DecompositionSearch,
    EFSearch,
    MRESearch,
    OptimizerConfig,
    OptResult,
    SeparableResult,
    SeparableSearch,
    generator,
    optimize_ef,
    optimize_mre,
    params_to_terms,
    re_upper_bound,
    seed_ensembles,
    terms_to_params,
)

__all__: list[str] = [
    'Decomposition',
    'DecompositionSearch',
    'EFSearch',
    'MRESearch',
    'OptResult',
    'OptimizerConfig',
    'SeparableResult',
    'SeparableSearch',
    'check_isometry',
    'ef_of_decomposition',
    'ef_of_ensemble',
    'eigendecomposition_ensemble',
    'ensemble_from_isometry',
    'ensemble_product_terms',
    'ext_werner_ensemble',
    'ext_werner_params_of',
    'generator',
    'isometry_from_ensemble',
    'lambda_ensemble',
    'mre_of_decomposition',
    'mre_of_ensemble',
    'optimize_ef',
    'optimize_mre',
    'params_to_terms',
    're_upper_bound',
    'recognize_family',
    'seed_ensembles',
    'terms_to_params',
    'total_relative_state',
    'werner_ensemble',
    'wootters_ensemble',
]
