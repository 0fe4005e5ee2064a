"""Gröbner basis layer

Global bases (Buchberger), local standard bases (Mora), syzygies,
elimination and leading-ideal dimension counts.
"""

from src.groebner.basis import Basis, BasisKind, is_groebner, normal_form
from src.groebner.buchberger import groebner_basis
from src.groebner.dimension import (
    INFINITE,
    krull_dimension,
    quotient_k_dimension,
    staircase,
)
from src.groebner.elimination import eliminate
from src.groebner.membership import compute_basis, ideal_equal
from src.groebner.mora import standard_basis
from src.groebner.syzygy import SyzygyMatrix, module_contains, syzygies

__all__ = [
    "Basis",
    "BasisKind",
    "INFINITE",
    "SyzygyMatrix",
    "compute_basis",
    "eliminate",
    "groebner_basis",
    "ideal_equal",
    "is_groebner",
    "krull_dimension",
    "module_contains",
    "normal_form",
    "quotient_k_dimension",
    "staircase",
    "standard_basis",
    "syzygies",
]
