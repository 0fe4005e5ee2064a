"""Ideal objects and derived ideal operations.

An Ideal caches one basis per monomial order; the operations module builds
intersection, colon, saturation, primary components, localization at primes
and local generator counts on top of the groebner package.
"""

from src.ideals.ideal import Ideal
from src.ideals.operations import (
    entries_ideal,
    fitting_ideal,
    ideal_quotient,
    intersection,
    localizes_to_prime,
    minimal_generators_at_prime,
    minimal_generators_local,
    primary_component_at_point,
    relative_minimal_generators_local,
    saturation,
)

__all__ = [
    "Ideal",
    "entries_ideal",
    "fitting_ideal",
    "ideal_quotient",
    "intersection",
    "localizes_to_prime",
    "minimal_generators_at_prime",
    "minimal_generators_local",
    "primary_component_at_point",
    "relative_minimal_generators_local",
    "saturation",
]
