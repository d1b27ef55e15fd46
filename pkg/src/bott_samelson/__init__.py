"""Standard monomial bases for Bott-Samelson varieties of GL(n)."""

from .charpoly import LaurentPolynomial, demazure_character, divided_difference, set_character
from .crystal import lower, raise_
from .standard import generate_constructible, generate_liftable, is_standard
from .weyl import Permutation, Shape, Subword, Word

__version__ = "0.1.0"

__all__ = [
    "LaurentPolynomial", "Permutation", "Shape", "Subword", "Word",
    "demazure_character", "divided_difference", "generate_constructible",
    "generate_liftable", "is_standard", "lower", "raise_", "set_character",
]
