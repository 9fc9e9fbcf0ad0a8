"""Closed forms of the Werner and extended Werner families."""

from ._ext_werner import (
    ExtWernerReport,
    ext_werner_eigenvalues,
    ext_werner_mre,
    ext_werner_relative_diagonal,
    ext_werner_report,
    ext_werner_separable,
)
from ._werner import WernerReport, werner_mre, werner_relative_state, werner_report

__all__: list[str] = [
    'ExtWernerReport',
    'WernerReport',
    'ext_werner_eigenvalues',
    'ext_werner_mre',
    'ext_werner_relative_diagonal',
    'ext_werner_report',
    'ext_werner_separable',
    'werner_mre',
    'werner_relative_state',
    'werner_report',
]
