"""Exact toric Calabi-Yau toolkit.

Smoothness certificates for the forgetful morphism from embedded to abstract
deformations of Calabi-Yau complete intersections in simplicial toric Fano
varieties, and their Hodge diamonds in dimensions three and four.
"""

from .catalog import catalog_entry, projective_space, weighted_projective
from .cohomology import CohomologyVector, cohomology_dims
from .fan import Fan, validate_fan
from .koszul import CompleteIntersectionCY, ci_twisted_cohomology
from .pipeline import hodge_diamond, smoothness_certificate, validate_cy

__all__ = [
    "CohomologyVector", "CompleteIntersectionCY", "Fan", "catalog_entry",
    "ci_twisted_cohomology", "cohomology_dims", "hodge_diamond", "projective_space",
    "smoothness_certificate", "validate_cy", "validate_fan", "weighted_projective",
]
__version__ = "0.1.0"
