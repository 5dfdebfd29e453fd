"""
Converse lower bound and the brute-force optimal-ideal oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Tuple

from ..errors import NonIdealInput, ProofAssertionFailed, require_within
from ..probability import commuting_probability, zero_probability
from ..ring_core import FiniteRing
from ..schema import DEFAULT_CAPS, Objective
from ..subobjects import AdditiveSubgroup, bracket_set, enumerate_subgroups, is_ideal, product_set, span_ids

Mode = Literal["cp", "zp"]


def _ideal_kind(mode: Mode) -> str:
    return "lie" if mode == "cp" else "two_sided"


def derived_span_size(ring: FiniteRing, D: AdditiveSubgroup, mode: Mode) -> int:
    """|span [D, D]| for cp, |span D^2| for zp."""
    pairs = bracket_set(ring, D, D) if mode == "cp" else product_set(ring, D, D)
    span, _ = span_ids(ring.shape, pairs.members)
    return len(span)


def converse_lower_bound(ring: FiniteRing, D: AdditiveSubgroup, mode: Mode = "cp") -> Fraction:
    """1 / (k m^2) with m = [R : D] and k = |span [D, D]| (or |span D^2|); cp (zp) never falls below it."""
    check = is_ideal(ring, D, _ideal_kind(mode))
    if not check:
        raise NonIdealInput(_ideal_kind(mode), check.witness)
    m = D.index
    k = derived_span_size(ring, D, mode)
    bound = Fraction(1, k * m * m)
    value = commuting_probability(ring) if mode == "cp" else zero_probability(ring)
    if value < bound:
        raise ProofAssertionFailed("converse_bound", {"value": str(value), "bound": str(bound)})
    return bound


def objective_value(index: int, span_size: int, objective: Objective) -> Tuple[int, ...]:
    if objective == "max":
        return (max(index, span_size),)
    if objective == "sum":
        return (index + span_size,)
    return (index, span_size)


@dataclass(frozen=True)
class OracleOutcome:
    ideal: AdditiveSubgroup
    index: int
    span_size: int
    value: Tuple[int, ...]
    candidates: int


def brute_force_optimal_ideal(
    ring: FiniteRing,
    mode: Mode = "cp",
    objective: Objective = "max",
    cap: int = DEFAULT_CAPS.oracle_order,
) -> OracleOutcome:
    """Ideal minimizing the objective over (index, derived span size); ties go to the least member tuple."""
    require_within("brute_force_optimal_ideal", ring.cardinality, cap)
    ideals = enumerate_subgroups(ring, kind=_ideal_kind(mode), cap=cap)
    best = None
    for D in ideals:
        k = derived_span_size(ring, D, mode)
        key = (objective_value(D.index, k, objective), D.members)
        if best is None or key < best[0]:
            best = (key, D, k)
    (value, _), D, k = best
    return OracleOutcome(ideal=D, index=D.index, span_size=k, value=value, candidates=len(ideals))


__all__ = [
    "OracleOutcome",
    "brute_force_optimal_ideal",
    "converse_lower_bound",
    "derived_span_size",
    "objective_value",
]
