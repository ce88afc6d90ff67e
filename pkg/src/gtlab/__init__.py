"""Minimum total dominating sets of forests: exact counts, bounds, and sweeps."""

from .bounds import BoundReport, Verdict, evaluate_bounds, solve_beta
from .forest import Forest, from_level_sequence, parse_forest, serialize
from .kernels import BACKEND
from .oracle import brute_gamma_t, is_total_dominating
from .tdp import MinCount, dp_gamma_t, list_gamma_t_sets
from .treegen import CanonicalTree, canonical_form, gen_trees

__all__ = [
    "BACKEND",
    "BoundReport",
    "CanonicalTree",
    "Forest",
    "MinCount",
    "Verdict",
    "brute_gamma_t",
    "canonical_form",
    "dp_gamma_t",
    "evaluate_bounds",
    "from_level_sequence",
    "gen_trees",
    "is_total_dominating",
    "list_gamma_t_sets",
    "parse_forest",
    "serialize",
    "solve_beta",
]
