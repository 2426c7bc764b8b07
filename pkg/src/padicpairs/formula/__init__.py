"""Formula language: syntax trees, parser and normal forms."""

from .ast import (
    FALSE,
    TRUE,
    And,
    Cong,
    Eq,
    Exists,
    Forall,
    GTerm,
    HAtom,
    Not,
    Or,
    VApp,
    VCmp,
    VLit,
    conj,
    disj,
    free_vars,
    is_quantifier_free,
    negate,
    to_text,
)
from .linear import Lin, ValueExpr
from .normalize import normalize, normalize_dnf
from .parser import parse, parse_gterm

__all__ = [
    "FALSE", "TRUE", "And", "Cong", "Eq", "Exists", "Forall", "GTerm", "HAtom", "Not", "Or",
    "VApp", "VCmp", "VLit", "conj", "disj", "free_vars", "is_quantifier_free", "negate",
    "to_text", "Lin", "ValueExpr", "normalize", "normalize_dnf", "parse", "parse_gterm",
]
