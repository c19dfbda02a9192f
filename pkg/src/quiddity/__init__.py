"""Conway-Coxeter frieze patterns and their combinatorial equivalents.

Exact, integer-only tooling for quiddity sequences, SL2(Z) generator
words, frieze patterns of integers and of matrices, positive SL2-tilings,
polygon triangulations with their dual binary trees, supplements of basic
sequences, and the exact count K_n of dihedral similarity types.
"""

from . import eta, frieze, polygons, similarity, sl2, supplements, tiling
from .errors import (
    ContractionError,
    InconsistentFactorsError,
    InvalidSequenceError,
    NotAPositiveTilingError,
    NotQuiddityError,
    NotUnimodularError,
)

__all__ = [
    "eta",
    "frieze",
    "polygons",
    "similarity",
    "sl2",
    "supplements",
    "tiling",
    "ContractionError",
    "InconsistentFactorsError",
    "InvalidSequenceError",
    "NotAPositiveTilingError",
    "NotQuiddityError",
    "NotUnimodularError",
]
