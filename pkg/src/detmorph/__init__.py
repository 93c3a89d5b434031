"""Morphisms determined by objects over bound quiver algebras, computed exactly over F_p."""

from .errors import DeterminatorAssertionError, InputError, PreconditionError
from .quiver import Arrow, BoundQuiverAlgebra, Quiver, linear_algebra, linear_quiver
from .fdalg import FDAlgebra
from .rep import (Representation, RepMorphism, add_member, direct_sum, hom_space,
                  indecomposable_decomposition, is_isomorphic, right_minimalize, simple)
from .ar import indec_injective, indec_projective, nakayama, tau, tau_inverse
from .determined import (GammaSubmodule, DeterminationReport, almost_split_ending_at,
                         check_auslander_claim, construct_determined, image_hom,
                         is_right_determined, minimal_determinator, sufficient_determinator)
from .poset import FinitePoset

__version__ = "0.1.0"

__all__ = [
    "Arrow", "BoundQuiverAlgebra", "DeterminationReport", "DeterminatorAssertionError",
    "FDAlgebra", "FinitePoset", "GammaSubmodule", "InputError", "PreconditionError", "Quiver",
    "RepMorphism", "Representation", "add_member", "almost_split_ending_at",
    "check_auslander_claim", "construct_determined", "direct_sum", "hom_space", "image_hom",
    "indec_injective", "indec_projective", "indecomposable_decomposition", "is_isomorphic",
    "is_right_determined", "linear_algebra", "linear_quiver", "minimal_determinator", "nakayama",
    "right_minimalize", "simple", "sufficient_determinator", "tau", "tau_inverse",
]
