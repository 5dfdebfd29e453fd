"""
Gap rows: how far the extracted ideal sits from the brute-force optimum.
"""
from __future__ import annotations

from typing import Callable, Optional

from ..errors import FlavorMismatch
from ..probability import commuting_probability, format_rational, zero_probability
from ..ring_core import FiniteRing, associated_lie_ring
from ..schema import DEFAULT_CAPS, ExtractionSettings, GapRow, Mode, Objective
from ..subobjects import is_ideal, subgroup
from .extraction import extract_commuting_ideal, extract_zero_ideal
from .oracle import brute_force_optimal_ideal, objective_value

LogFn = Optional[Callable[[str], None]]


def gap_row(
    ring: FiniteRing,
    mode: Mode = "cp",
    objective: Objective = "max",
    settings: ExtractionSettings = ExtractionSettings(),
    oracle_cap: int = DEFAULT_CAPS.oracle_order,
    log: LogFn = None,
) -> GapRow:
    """Extract, then compare with the optimal ideal when the ring is within the oracle cap.

    ``gap`` is the difference of the leading objective component (extracted minus optimal),
    so it is never negative on a feasible extraction.
    """
    if mode == "zp" and ring.flavor != "associative":
        raise FlavorMismatch("zero-product gap", ring.flavor)
    if mode == "cp":
        report = extract_commuting_ideal(ring, settings=settings, strict=False, log=log)
        target = ring if ring.flavor == "lie" else associated_lie_ring(ring)
        kind = "lie"
    else:
        report = extract_zero_ideal(ring, settings=settings, strict=False, log=log)
        target = ring
        kind = "two_sided"
    extracted = objective_value(report.index_d, report.square_or_bracket_span_size, objective)
    row = GapRow(
        ring_name=ring.label(),
        cardinality=ring.cardinality,
        mode=mode,
        objective=objective,
        cp=format_rational(commuting_probability(ring)),
        zp=format_rational(zero_probability(ring)) if ring.flavor == "associative" else None,
        valid=report.valid,
        index_d=report.index_d,
        span_d=report.square_or_bracket_span_size,
        extracted_value=list(extracted),
    )
    if ring.cardinality > oracle_cap:
        return row
    best = brute_force_optimal_ideal(target, mode=mode, objective=objective, cap=oracle_cap)
    D = subgroup(target, report.d.members, report.d.generators)
    feasible = bool(is_ideal(target, D, kind)) and extracted >= best.value
    row.oracle_index = best.index
    row.oracle_span = best.span_size
    row.oracle_value = list(best.value)
    row.gap = extracted[0] - best.value[0]
    row.feasible = feasible
    return row


__all__ = ["gap_row"]
