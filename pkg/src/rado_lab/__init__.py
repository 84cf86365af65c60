"""Exact 2-color Rado numbers for x_1 + ... + x_m + c = a x_0."""

__version__ = "0.1.0"

from .checker import Witness, find_mono_solution, find_mono_solution_incremental, is_solution
from .coloring import Color, Coloring, PartialColoring, parse_coloring
from .formula import Registry, lemma1_lower_bound, rado_linear, rado_main_formula, rado_value, registry_lookup
from .proofs import ForcingChain, MalformedChainError, parse_chain, verify_chain
from .search import SearchBudget, brute_scan, explore_negative_c, find_valid_coloring, rado_brute
from .values import (
    DomainError,
    EquationParams,
    Finite,
    Infinite,
    Obstruction,
    RadoOverflowError,
    RadoValue,
    UnknownAbove,
)

__all__ = [
    "Color",
    "Coloring",
    "DomainError",
    "EquationParams",
    "Finite",
    "ForcingChain",
    "Infinite",
    "MalformedChainError",
    "Obstruction",
    "PartialColoring",
    "RadoOverflowError",
    "RadoValue",
    "Registry",
    "SearchBudget",
    "UnknownAbove",
    "Witness",
    "brute_scan",
    "explore_negative_c",
    "find_mono_solution",
    "find_mono_solution_incremental",
    "find_valid_coloring",
    "is_solution",
    "lemma1_lower_bound",
    "parse_chain",
    "parse_coloring",
    "rado_brute",
    "rado_linear",
    "rado_main_formula",
    "rado_value",
    "registry_lookup",
    "verify_chain",
]
