"""Toric posets, their toric total extensions, and Greene-type rational functions."""

from .errors import InputError, InvariantViolation, PreconditionError, ResourceError, ToricError
from .extensions import (
    ToricExtensionSet,
    ToricTotalOrder,
    add_arc,
    bounded_bijection,
    count_ltor,
    cyclic_canonical,
    ltor,
    ltor_bruteforce,
    ltor_partition,
    ltor_recursive,
)
from .greene import psi_poset, psi_tor, psi_tor_bounded, psi_tor_word
from .quiver import Graph, Quiver, flip, linear_extensions, sinks, sources
from .ratfun import LinearFactor, RationalFunction, SparsePolynomial, rf_equal, rf_to_string
from .toric import flip_class, same_toric_poset, toric_hasse, toric_poset, toric_transitive_closure

__all__ = [
    "Graph", "InputError", "InvariantViolation", "LinearFactor", "PreconditionError", "Quiver", "RationalFunction",
    "ResourceError", "SparsePolynomial", "ToricError", "ToricExtensionSet", "ToricTotalOrder", "add_arc",
    "bounded_bijection", "count_ltor", "cyclic_canonical", "flip", "flip_class", "linear_extensions", "ltor",
    "ltor_bruteforce", "ltor_partition", "ltor_recursive", "psi_poset", "psi_tor", "psi_tor_bounded",
    "psi_tor_word", "rf_equal", "rf_to_string", "same_toric_poset", "sinks", "sources", "toric_hasse",
    "toric_poset", "toric_transitive_closure",
]
