"""Linear algebra over Z/nZ: degree matrices, normal forms, *-equivalence."""

from ffcount.zn.equivalence import EquivalenceResult, star_equivalent
from ffcount.zn.matrix import ZnMatrix, augmented_degree_matrix, degree_matrix
from ffcount.zn.normal_forms import NullspaceGens, howell_form, nullspace_mod, smith_decomposition

__all__ = [
    "EquivalenceResult",
    "NullspaceGens",
    "ZnMatrix",
    "augmented_degree_matrix",
    "degree_matrix",
    "howell_form",
    "nullspace_mod",
    "smith_decomposition",
    "star_equivalent",
]
