"""Factroids (colon-absorbing additive subgroups) of commutative rings."""

from .errors import (
    BudgetError,
    DegreeOverflowError,
    DomainError,
    FactroidError,
    ParseError,
    RingMismatchError,
    UnsupportedError,
)
from .factroid import a_of, closure, closure_int, colon_by_set, colon_into_ring, f1_step, hom_preimage, is_factroid, saturate, w_of
from .mulsets import parse_mulset
from .rings import parse_element, parse_ring

__version__ = "0.1.0"

__all__ = [
    "parse_ring",
    "parse_element",
    "parse_mulset",
    "closure",
    "closure_int",
    "saturate",
    "f1_step",
    "is_factroid",
    "w_of",
    "a_of",
    "colon_by_set",
    "colon_into_ring",
    "hom_preimage",
    "FactroidError",
    "ParseError",
    "DomainError",
    "RingMismatchError",
    "UnsupportedError",
    "DegreeOverflowError",
    "BudgetError",
]
