"""Exact probabilities that a random rhombus tiling of a hexagon contains a
fixed horizontal rhombus, and tools for guessing and checking their
``1/3 + f(n) C(2n,n)^3 / C(6n+2,3n+1)`` closed forms."""

from .engine import (
    check_recurrence_332,
    conjecture_prob,
    contains_prob,
    g_value,
    r_factor,
    single_sum_B,
    total_tilings,
)
from .exact import Polynomial, RationalFunction
from .hexagon import FamilyOffsets, HexagonSpec, RhombusPos, instantiate

__version__ = "0.1.0"

__all__ = [
    "FamilyOffsets",
    "HexagonSpec",
    "Polynomial",
    "RationalFunction",
    "RhombusPos",
    "check_recurrence_332",
    "conjecture_prob",
    "contains_prob",
    "g_value",
    "instantiate",
    "r_factor",
    "single_sum_B",
    "total_tilings",
]
