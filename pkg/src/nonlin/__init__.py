"""Exact decomposition-type non-linear integrals on finite ground sets.

The lower integral of ``f`` over a family ``E`` of simple functions is the
sup of basic sums ``sum a_k mu(A_k)`` over members of ``E`` lying below
``f``; the upper integral is the inf over members lying above. Families are
partitions or coverings of the ground set with non-negative or signed
coefficients. All arithmetic is exact (:class:`fractions.Fraction`).
"""

from .engine import CONCAVE, CONVEX, PAN, SD, IntegralResult, IntegralSpec, Status, integrate
from .measure import (
    GroundSet,
    MonotoneMeasure,
    NegativeValue,
    NonMonotone,
    NonZeroEmpty,
    is_additive,
    is_subadditive,
    make_measure,
    random_measure,
)
from .simple import (
    ALL_FAMILIES,
    C_PLUS,
    C_PLUS_MU,
    C_PM,
    C_PM_MU,
    P_PLUS,
    P_PLUS_MU,
    P_PM,
    P_PM_MU,
    Direction,
    FamilyTag,
    MeasurableFn,
    SimpleFunction,
    basic_sum,
    classify,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_FAMILIES",
    "CONCAVE",
    "CONVEX",
    "C_PLUS",
    "C_PLUS_MU",
    "C_PM",
    "C_PM_MU",
    "Direction",
    "FamilyTag",
    "GroundSet",
    "IntegralResult",
    "IntegralSpec",
    "MeasurableFn",
    "MonotoneMeasure",
    "NegativeValue",
    "NonMonotone",
    "NonZeroEmpty",
    "PAN",
    "P_PLUS",
    "P_PLUS_MU",
    "P_PM",
    "P_PM_MU",
    "SD",
    "SimpleFunction",
    "Status",
    "basic_sum",
    "classify",
    "integrate",
    "is_additive",
    "is_subadditive",
    "make_measure",
    "random_measure",
]
