"""Exact arithmetic in cyclotomic Hecke algebras at small rank."""

from .algebra import HeckeAlgebra, HeckeElement, HeckeParams, NormalWord, SemisimplicityError
from .bases import CellularBases, Report, young_subgroup
from .klr import KLRData, block_idempotents, klr_idempotents, klr_y, verify_klr
from .scalars import GF, ScalarField, prime_field, rational_field
from .seminormal import SeminormalModel, seminormal_model, verify_cross_model, verify_model_relations

__all__ = [
    "HeckeAlgebra",
    "HeckeElement",
    "HeckeParams",
    "NormalWord",
    "SemisimplicityError",
    "CellularBases",
    "Report",
    "young_subgroup",
    "KLRData",
    "block_idempotents",
    "klr_idempotents",
    "klr_y",
    "verify_klr",
    "GF",
    "ScalarField",
    "prime_field",
    "rational_field",
    "SeminormalModel",
    "seminormal_model",
    "verify_cross_model",
    "verify_model_relations",
]
