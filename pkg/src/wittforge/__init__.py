"""Exact quadratic-form invariants, Witt-ring decisions, Pfister decompositions,
the Clifford 2-groups G_n and essential-dimension bound calculators."""

from .fields import GF, QQ, REAL, BaseField, DomainError, FieldElem, Place
from .forms import DiagonalForm, hyperbolic, invariants
from .pfister import PfisterSlots
from .witt import ideal_membership, is_hyperbolic, witt_equivalent

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "REAL",
    "BaseField",
    "DiagonalForm",
    "DomainError",
    "FieldElem",
    "PfisterSlots",
    "Place",
    "hyperbolic",
    "ideal_membership",
    "invariants",
    "is_hyperbolic",
    "witt_equivalent",
]
