"""Grammatical calculus for Narayana and Motzkin polynomial refinements."""

from .poly import LaurentPoly, Monomial, parse_poly
from .series import PowerSeries
from .grammar import BUILTIN, Grammar
from .trees import PlaneTree, TreeStats, classify, enumerate_trees, weight_sum

__all__ = [
    "BUILTIN",
    "Grammar",
    "LaurentPoly",
    "Monomial",
    "PlaneTree",
    "PowerSeries",
    "TreeStats",
    "classify",
    "enumerate_trees",
    "parse_poly",
    "weight_sum",
]
