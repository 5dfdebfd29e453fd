"""
One-sided to two-sided descent.

A right ideal B of finite index that is not a left ideal admits y with
yB not inside B; then B + yB is again a right ideal of strictly smaller
index. Iterating reaches a two-sided ideal after at most log2 [R : B]
steps. Left ideals are handled by the mirror image (B + By).
"""
from __future__ import annotations

from math import log2
from typing import Callable, List, Literal, Optional, Tuple

from ..errors import FlavorMismatch, NonIdealInput, require_within
from ..ring_core import FiniteRing
from ..schema import DEFAULT_CAPS, DescentStep, DescentTrace
from ..subobjects import (
    AdditiveSubgroup,
    additive_span,
    is_ideal,
    left_annihilator,
    left_multiples,
    product_set,
    right_annihilator,
    right_multiples,
    subgroup_record,
)
from .audit import AuditLog, deterministic_sample

Side = Literal["left", "right"]
LogFn = Optional[Callable[[str], None]]


def detect_side(ring: FiniteRing, B: AdditiveSubgroup) -> Side:
    right = is_ideal(ring, B, "right")
    if right:
        return "right"
    left = is_ideal(ring, B, "left")
    if left:
        return "left"
    raise NonIdealInput("one_sided", right.witness)


def _escaping_element(ring: FiniteRing, B: AdditiveSubgroup, side: Side) -> int:
    """Least y in R with yB (right ideals) or By (left ideals) not inside B."""
    gens = B.spanning_set
    for y in ring.elements():
        if side == "right":
            if any(ring.mul(y, g) not in B for g in gens):
                return y
        elif any(ring.mul(g, y) not in B for g in gens):
            return y
    raise AssertionError("two-sided ideal has no escaping element")


def one_sided_to_two_sided(
    ring: FiniteRing,
    B: AdditiveSubgroup,
    side: Optional[Side] = None,
    sample_size: int = 64,
    log: LogFn = None,
) -> Tuple[AdditiveSubgroup, DescentTrace]:
    if ring.flavor != "associative":
        raise FlavorMismatch("one_sided_to_two_sided", ring.flavor)
    require_within("one_sided_to_two_sided", ring.cardinality, DEFAULT_CAPS.max_order)
    if side is None:
        side = detect_side(ring, B)
    else:
        check = is_ideal(ring, B, side)
        if not check:
            raise NonIdealInput(side, check.witness)

    # Annihilators on the side that the descent preserves.
    annihilator = right_annihilator if side == "right" else left_annihilator
    orbit = right_multiples if side == "right" else left_multiples

    audit = AuditLog()
    initial_index = B.index
    n0 = max(B.index, len(product_set(ring, B, B)))
    steps: List[DescentStep] = []
    current = B
    while not is_ideal(ring, current, "two_sided"):
        y = _escaping_element(ring, current, side)
        if side == "right":
            moved = [ring.mul(y, g) for g in current.spanning_set]
        else:
            moved = [ring.mul(g, y) for g in current.spanning_set]
        D = additive_span(ring, list(current.spanning_set) + moved)
        n_step = max(current.index, len(product_set(ring, current, current)))
        bound = n_step**4
        label = f"step{len(steps) + 1}"

        kept = is_ideal(ring, D, side)
        audit.check(f"{label}.one_sided", bool(kept), kept.witness)
        audit.check(f"{label}.index_drops", D.index < current.index, {"before": current.index, "after": D.index})

        members = deterministic_sample(current.members, sample_size)
        pairs = list(zip(members, members[1:] + members[:1]))
        worst = 0
        violation = None
        for b1, b2 in pairs:
            yb1 = ring.mul(y, b1) if side == "right" else ring.mul(b1, y)
            d = ring.add(yb1, b2)
            ann_pair = annihilator(ring, [b1, b2])
            ann_d = annihilator(ring, [d])
            if violation is None and not ann_pair.member_set <= ann_d.member_set:
                violation = {"b1": b1, "b2": b2, "d": d}
            worst = max(worst, len(orbit(ring, d)))
        audit.check(f"{label}.ann_contains_pair_ann", violation is None, violation)
        audit.check(f"{label}.ann_index_bound", worst <= bound, {"index": worst, "bound": bound})

        steps.append(
            DescentStep(
                step=len(steps) + 1,
                y=y,
                index_before=current.index,
                index_after=D.index,
                n_step=n_step,
                max_ann_index=worst,
                ann_bound=bound,
                samples=len(pairs),
            )
        )
        if log:
            log(f"descent[{side}] step {len(steps)}: y={y} index {current.index} -> {D.index}")
        if D.index >= current.index:
            break
        current = D

    final = is_ideal(ring, current, "two_sided")
    audit.check("final_two_sided", bool(final), final.witness)
    limit = log2(initial_index) if initial_index > 1 else 0
    audit.check("descent_length", len(steps) <= limit, {"steps": len(steps), "initial_index": initial_index})

    trace = DescentTrace(
        side=side,
        initial_index=initial_index,
        n=n0,
        steps=steps,
        final=subgroup_record(current),
        assertion_log=audit.records,
        valid=audit.passed,
    )
    return current, trace


__all__ = ["detect_side", "one_sided_to_two_sided"]
