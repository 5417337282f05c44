"""Exact eigenweights of the reduced operator on ``I / I^2`` for classical groups.

Closed formulas in terms of symmetric-group characters live in ``formulas``;
``gysin`` recomputes the same numbers from the definition by localization.
"""

from .characters import character, cycle_character
from .formulas import formula_eigen, typeA, typeB, typeC, typeD_spin, typeD_standard
from .groups import EigenResult, GroupSpec
from .gysin import oracle_eigen
from .partitions import Partition

__all__ = [
    "EigenResult",
    "GroupSpec",
    "Partition",
    "character",
    "cycle_character",
    "formula_eigen",
    "oracle_eigen",
    "typeA",
    "typeB",
    "typeC",
    "typeD_spin",
    "typeD_standard",
]
