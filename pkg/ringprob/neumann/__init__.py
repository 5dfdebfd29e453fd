"""
Executable proof pipelines: Eberhard generation, the bounded-square and
bounded-commutator constructions, one-sided to two-sided descent, ideal
extraction for cp and zp, and the brute-force oracles that certify them.
"""
from .constructions import bounded_commutator_construction, bounded_square_construction
from .descent import one_sided_to_two_sided
from .extraction import extract_commuting_ideal, extract_zero_ideal, x_set
from .oracle import brute_force_optimal_ideal, converse_lower_bound
from .sumsets import eberhard_generation

__all__ = [
    "bounded_commutator_construction",
    "bounded_square_construction",
    "brute_force_optimal_ideal",
    "converse_lower_bound",
    "eberhard_generation",
    "extract_commuting_ideal",
    "extract_zero_ideal",
    "one_sided_to_two_sided",
    "x_set",
]
