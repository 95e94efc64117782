"""Exact dilatations and Agol cycles for two braid families.

The torus family lives on the twice-punctured torus and the sphere family on
the five-punctured sphere; both are indexed by parameter words
(:class:`ParamWord`).
"""

__version__ = "0.1.0"

from .quad import QuadExt, cmp, Ordering
from .words import ParamWord, canonical_form, are_equivalent, validate
from .cfrac import dilatation, normalized_eigenvector, split_ratio, rectangle_data
from .matrices import word_matrix, verify_eigenpair
from .cycles import Surface, torus_cycle, sphere_cycle, cycle, check_additivity

__all__ = [
    "QuadExt",
    "cmp",
    "Ordering",
    "ParamWord",
    "canonical_form",
    "are_equivalent",
    "validate",
    "dilatation",
    "normalized_eigenvector",
    "split_ratio",
    "rectangle_data",
    "word_matrix",
    "verify_eigenpair",
    "Surface",
    "torus_cycle",
    "sphere_cycle",
    "cycle",
    "check_additivity",
]
