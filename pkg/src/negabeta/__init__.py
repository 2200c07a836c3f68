"""Exact arithmetic and symbolic dynamics for negative-base expansions."""

from .numerics import (BetaSpec, FieldElement, RationalInterval,
                       beta_from_poly, beta_from_rational, fe_compare,
                       fe_floor)
from .order import SymbolicSequence, Word, alt_compare, alt_compare_seq
from .expansion import Expansion, corrected, evaluate, expand, reference_pair
from .language import (Classification, PeriodTarget, Variant, classify,
                       count_periodic_points, enumerate_words,
                       factor_complexity, is_admissible_word)
from .wordset import WordSet

__all__ = [
    "BetaSpec", "FieldElement", "RationalInterval", "beta_from_poly",
    "beta_from_rational", "fe_compare", "fe_floor", "SymbolicSequence",
    "Word", "alt_compare", "alt_compare_seq", "Expansion", "corrected",
    "evaluate", "expand", "reference_pair", "Classification", "PeriodTarget",
    "Variant", "classify", "count_periodic_points", "enumerate_words",
    "factor_complexity", "is_admissible_word", "WordSet",
]

__version__ = "0.1.0"
