"""Graded Specht module combinatorics and exact cyclotomic Hecke algebra checks."""

from .laurent import LaurentIntPoly

__version__ = "0.1.0"

__all__ = ["LaurentIntPoly", "__version__"]
