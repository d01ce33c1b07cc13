"""Bialgebras by structure constants and their cosimplicial complexes."""
from .cohomology import (AbelianGroup, K0Shadow, UnitCohomology, k0_shadow, multiplicative_differential,
                         sweedler_cohomology, unit_cohomology)
from .complexes import amitsur_complex, bar_complex, cobar_complex, dual_algebra
from .core import (BialgebraAxiomError, FinBialgebra, FiniteGroup, field_extension, flip_matrix, group_algebra,
                   small_groups, truncated_polynomial)
from .lie import LieAlgebraDatum, Wedge, first_approx_cone_check, schouten_bracket
from .search import (Twist, group_likes, is_twist, normalize_twist, primitive_elements,
                     primitives_closed_under_commutator, twist_search_and_apply)
from ..cosimplicial import tangent_cohomology

__all__ = [
    "AbelianGroup", "K0Shadow", "UnitCohomology", "k0_shadow", "multiplicative_differential",
    "sweedler_cohomology", "unit_cohomology", "amitsur_complex", "bar_complex", "cobar_complex",
    "dual_algebra", "BialgebraAxiomError", "FinBialgebra", "FiniteGroup", "field_extension", "flip_matrix",
    "group_algebra", "small_groups", "truncated_polynomial", "LieAlgebraDatum", "Wedge",
    "first_approx_cone_check", "schouten_bracket", "Twist", "group_likes", "is_twist", "normalize_twist",
    "primitive_elements", "primitives_closed_under_commutator", "twist_search_and_apply",
    "tangent_cohomology",
]
