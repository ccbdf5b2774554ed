"""Exact construction and verification of bialgebroids and Hopf algebroids.

The package builds, over Q: smash and crossed products of Hopf-algebra
actions, enveloping algebroids of module algebras, endomorphism bialgebroids
of depth-two ring extensions, Galois and pseudo-Galois certificates, and a
rewriting model of a Weyl-algebra algebroid — and mechanically checks every
axiom, morphism and isomorphism on finite instances with zero tolerance.
"""

from .linalg import Mat, QQ, Subspace, kernel_basis, rref, solve
from .algebra import (Algebra, AlgMorphism, Element, Subalgebra, centralizer,
                      check_algebra, endomorphism_algebra, fixed_subalgebra,
                      morphism_check, mul, opposite, tensor_algebra)
from .report import CheckItem, Report

__all__ = [
    "Mat", "QQ", "Subspace", "kernel_basis", "rref", "solve",
    "Algebra", "AlgMorphism", "Element", "Subalgebra", "centralizer",
    "check_algebra", "endomorphism_algebra", "fixed_subalgebra",
    "morphism_check", "mul", "opposite", "tensor_algebra",
    "CheckItem", "Report",
]
