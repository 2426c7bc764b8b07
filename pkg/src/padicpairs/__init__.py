"""Exact computation with the valued groups ``alpha^Z beta^Z`` inside ``Q_p``.

The package covers p-adic primitives, the standard model of a pair of
p-valued groups, a decision procedure for its first-order theory, a finite
axiom audit, bounded Mann-equation enumeration and the discrete-case maps.
"""

__version__ = "0.1.0"

from .config import Config
from .errors import (
    BudgetError,
    ConfigError,
    DependenceError,
    DomainError,
    FormulaSyntaxError,
    IndeterminateError,
    PadicPairsError,
    UnsupportedFragmentError,
)
from .groups import ALPHA, BETA, IDENTITY, INF, GroupElement, StandardModel
from .padic import PadicApprox, is_nth_power, lambda_rep, padic_log, vp

__all__ = [
    "ALPHA",
    "BETA",
    "IDENTITY",
    "INF",
    "BudgetError",
    "Config",
    "ConfigError",
    "DependenceError",
    "DomainError",
    "FormulaSyntaxError",
    "GroupElement",
    "IndeterminateError",
    "PadicApprox",
    "PadicPairsError",
    "StandardModel",
    "UnsupportedFragmentError",
    "is_nth_power",
    "lambda_rep",
    "padic_log",
    "vp",
]
