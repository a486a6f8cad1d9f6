"""Genus-2 hyperelliptic Jacobian arithmetic over odd-characteristic finite
fields, coefficient/bit extractors on Mumford representatives, and exact
verification tools for output distributions and additive character sums."""

__version__ = "0.1.0"

from .curve import (
    AffinePoint,
    HyperellipticCurve,
    MumfordDivisor,
    find_squarefree_quintic,
)
from .extractors import (
    ExtractorKind,
    extract,
    extract_prod,
    extract_prod_bits,
    extract_sum,
    extract_sum_bits,
)
from .field import FieldElement, FiniteField, find_irreducible, finite_field, is_prime
from .poly import Poly
from .stats import RandomSource, Tally

__all__ = [
    "AffinePoint",
    "ExtractorKind",
    "FieldElement",
    "FiniteField",
    "HyperellipticCurve",
    "MumfordDivisor",
    "Poly",
    "RandomSource",
    "Tally",
    "extract",
    "extract_prod",
    "extract_prod_bits",
    "extract_sum",
    "extract_sum_bits",
    "find_irreducible",
    "find_squarefree_quintic",
    "finite_field",
    "is_prime",
    "__version__",
]
