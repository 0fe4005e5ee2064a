"""Singularity theory of hypersurfaces.

Gradient and Jacobian ideals, rational singular points, Milnor and Tjurina
numbers, the locally Eulerian and socle tests, quasi-homogeneity, ADE
classification of plane curve germs and the genus formula.
"""

from src.singularity.ade import classify_ade, delta_and_branches, genus
from src.singularity.analyzer import (
    HypersurfaceAnalysis,
    LocalChart,
    analyze_hypersurface,
    analyze_point,
    local_chart,
)
from src.singularity.invariants import (
    gradient_ideal,
    is_local_complete_intersection,
    is_locally_eulerian,
    jacobian_ideal,
    milnor_number,
    multiplicity,
    socle_module_cyclic,
    tjurina_number,
)
from src.singularity.points import SingularLocus, check_reduced, singular_points
from src.singularity.quasi import (
    QuasiHomogeneousWeights,
    SemiQuasiHomogeneousPart,
    quasi_homogeneous_weights,
    semiquasi_homogeneous_part,
)

__all__ = [
    "HypersurfaceAnalysis",
    "LocalChart",
    "QuasiHomogeneousWeights",
    "SemiQuasiHomogeneousPart",
    "SingularLocus",
    "analyze_hypersurface",
    "analyze_point",
    "check_reduced",
    "classify_ade",
    "delta_and_branches",
    "genus",
    "gradient_ideal",
    "is_local_complete_intersection",
    "is_locally_eulerian",
    "jacobian_ideal",
    "local_chart",
    "milnor_number",
    "multiplicity",
    "quasi_homogeneous_weights",
    "semiquasi_homogeneous_part",
    "singular_points",
    "socle_module_cyclic",
    "tjurina_number",
]
