"""Exact analysis of idempotents and axes in nonassociative algebras."""

from .field import GF, QQ, Mod, PrimeField, Rationals
from .linalg import Matrix, Polynomial
from .algebra import Algebra, Element, Subspace

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "Mod", "PrimeField", "Rationals", "Matrix", "Polynomial",
           "Algebra", "Element", "Subspace"]
