"""Exact weight calculus and exhaustive checks for low-dimensional irreducible
semisimple subgroups of GL_7 and GL_8."""

from lieforge.rootsys import SemisimpleAlgebra, SimpleType, parse_algebra
from lieforge.weights import IrreducibleRep, WeightMultiset

__all__ = [
    "IrreducibleRep",
    "SemisimpleAlgebra",
    "SimpleType",
    "WeightMultiset",
    "parse_algebra",
]

__version__ = "0.1.0"
