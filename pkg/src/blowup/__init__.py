"""Blowup algebras and linear type.

Presentation ideals of the symmetric and Rees algebras of an ideal, the
direct linear-type test with witness extraction, and the composite Jacobian
and gradient linear-type verdicts.
"""

from src.blowup.linear_type import (
    gradient_linear_type,
    is_linear_type,
    jacobian_linear_type,
    non_linear_relations,
    syzygy_entries_codim_check,
)
from src.blowup.presentation import (
    PresentationIdeal,
    PresentationKind,
    rees_ideal,
    substitute_images,
    symmetric_ideal,
)

__all__ = [
    "PresentationIdeal",
    "PresentationKind",
    "gradient_linear_type",
    "is_linear_type",
    "jacobian_linear_type",
    "non_linear_relations",
    "rees_ideal",
    "substitute_images",
    "symmetric_ideal",
    "syzygy_entries_codim_check",
]
