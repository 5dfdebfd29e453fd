"""
Bounded-square and bounded-commutator constructions.

Given a domain D (the whole ring by default), let n be the largest orbit
|[D, x]| (or |xD|) and a the least element attaining it. The values of the
orbit of a are realized by b_1..b_n; on the subgroup C that kills every b_i
the orbit of a + x stays equal to the orbit of a, which forces [D, x] into
[D, a]. A transversal a_1..a_s of C in D then covers [D, D] (or D^2) by the
sum of the orbits of a_0 = a, a_1, ..., a_s.
"""
from __future__ import annotations

from math import prod
from typing import Callable, Dict, List, Literal, Optional

from ..errors import FlavorMismatch, require_within
from ..ring_core import FiniteRing
from ..schema import DEFAULT_CAPS, ConstructionReport
from ..subobjects import (
    AdditiveSubgroup,
    ElementSet,
    bracket_set,
    centralizer,
    commutator_set,
    left_annihilator,
    product_set,
    right_annihilator,
    right_multiples,
    span_ids,
    subgroup_record,
    transversal,
    whole,
)
from .audit import AuditLog

LogFn = Optional[Callable[[str], None]]


def _orbit_fn(ring: FiniteRing, mode: Literal["cp", "zp"], domain: AdditiveSubgroup) -> Callable[[int], ElementSet]:
    if mode == "cp":
        return lambda x: commutator_set(ring, x, domain)
    return lambda x: right_multiples(ring, x, domain)


def _pair_fn(ring: FiniteRing, mode: Literal["cp", "zp"], a: int) -> Callable[[int], int]:
    # y -> [y, a] or y -> a·y, the map whose image is the orbit of a.
    if mode == "cp":
        return lambda y: ring.bracket(y, a)
    return lambda y: ring.mul(a, y)


def _realizers(domain: AdditiveSubgroup, values: ElementSet, fn: Callable[[int], int]) -> List[int]:
    found: Dict[int, int] = {}
    wanted = values.member_set
    for y in domain.members:
        v = fn(y)
        if v in wanted and v not in found:
            found[v] = y
            if len(found) == len(wanted):
                break
    return [found[v] for v in values.members]


def _construct(
    ring: FiniteRing,
    mode: Literal["cp", "zp"],
    within: Optional[AdditiveSubgroup],
    log: LogFn,
) -> ConstructionReport:
    require_within("construction", ring.cardinality, DEFAULT_CAPS.max_order)
    domain = within if within is not None else whole(ring)
    audit = AuditLog()
    notes: List[str] = []
    orbit = _orbit_fn(ring, mode, domain)

    sizes = {x: len(orbit(x)) for x in domain.members}
    n = max(sizes.values())
    a = min(x for x, size in sizes.items() if size == n)
    orbit_a = orbit(a)
    b_list = _realizers(domain, orbit_a, _pair_fn(ring, mode, a))
    if log:
        log(f"construction[{mode}]: |D|={domain.order} n={n} a={a}")

    literal_order: Optional[int] = None
    if mode == "cp":
        C = centralizer(ring, b_list, within=domain)
    else:
        # x·b_i = 0 keeps (a + x)y = ay for y = b_i; the right annihilator is reported alongside.
        C = left_annihilator(ring, b_list, within=domain)
        literal_order = right_annihilator(ring, b_list, within=domain).order
        if literal_order != C.order:
            notes.append(f"right annihilator of b_list has order {literal_order}, left has {C.order}")

    stable_witness = None
    contained_witness = None
    for x in C.members:
        orbit_x = orbit(x)
        if stable_witness is None and orbit(ring.add(a, x)).member_set != orbit_a.member_set:
            stable_witness = x
        if contained_witness is None and not orbit_x.member_set <= orbit_a.member_set:
            contained_witness = x
        if stable_witness is not None and contained_witness is not None:
            break
    audit.check("orbit_stable_on_c", stable_witness is None, stable_witness)
    audit.check("orbit_contained_on_c", contained_witness is None, contained_witness)

    reps = transversal(ring, C, within=domain)
    s = len(reps)
    audit.check("transversal_bound", s <= n**n, {"s": s, "n": n})
    sequence = [a] + reps
    orbit_sizes = [len(orbit(x)) for x in sequence]
    union, _ = span_ids(ring.shape, (v for x in sequence for v in orbit(x).members))

    if mode == "cp":
        full = bracket_set(ring, domain, domain)
    else:
        full = product_set(ring, domain, domain)
    full_span, _ = span_ids(ring.shape, full.members)
    missing = sorted(full_span - union)
    audit.check("span_covered_by_orbits", not missing, missing[:1] or None)

    bound = prod(orbit_sizes)
    audit.check("product_bound", len(full_span) <= bound, {"span": len(full_span), "bound": bound})

    return ConstructionReport(
        ring_name=ring.name,
        ring_hash=ring.content_hash,
        mode=mode,
        domain_order=domain.order,
        domain_index=domain.index,
        a=a,
        n=n,
        b_list=b_list,
        c=subgroup_record(C),
        literal_annihilator_order=literal_order,
        transversal=reps,
        s=s,
        orbit_sizes=orbit_sizes,
        product_bound=str(bound),
        set_size=len(full),
        span_size=len(full_span),
        assertion_log=audit.records,
        valid=audit.passed,
        notes=notes,
    )


def bounded_commutator_construction(
    ring: FiniteRing,
    within: Optional[AdditiveSubgroup] = None,
    log: LogFn = None,
) -> ConstructionReport:
    """[D, D] inside the sum of [D, a_i], with |[D, D]| at most the product of their sizes."""
    return _construct(ring, "cp", within, log)


def bounded_square_construction(
    ring: FiniteRing,
    within: Optional[AdditiveSubgroup] = None,
    log: LogFn = None,
) -> ConstructionReport:
    """D^2 inside the sum of a_i D, with |D^2| at most the product of their sizes."""
    if ring.flavor != "associative":
        raise FlavorMismatch("bounded_square_construction", ring.flavor)
    return _construct(ring, "zp", within, log)


__all__ = ["bounded_commutator_construction", "bounded_square_construction"]
