"""
Additive subgroups, centralizers, annihilators, orbit sets, ideal closures and indices.

Subgroups are explicit sorted id sets; the rings are small enough that exact
enumeration beats any normal-form shortcut. Functions that take ``within``
work inside an additive subgroup D instead of the whole ring (centralizers in
D, orbits over D, cosets of D).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, FrozenSet, Iterable, Iterator, List, Literal, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import FlavorMismatch, require_within
from .ring_core import FiniteRing, GroupShape
from .schema import DEFAULT_CAPS, SubgroupRecord

IdealKind = Literal["left", "right", "two_sided", "lie"]
SubgroupKind = Literal["additive", "left", "right", "two_sided", "lie"]


@dataclass(frozen=True)
class ElementSet:
    ring: FiniteRing = field(repr=False, compare=False)
    members: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @cached_property
    def member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AdditiveSubgroup(ElementSet):
    generators: Tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.ring.cardinality // len(self.members)

    @cached_property
    def spanning_set(self) -> Tuple[int, ...]:
        """Least-id irredundant generating set."""
        _, gens = span_ids(self.ring.shape, self.members)
        return gens


class IdealClosure(NamedTuple):
    ideal: AdditiveSubgroup
    witnesses: Tuple[int, ...]


class IdealCheck(NamedTuple):
    holds: bool
    witness: Optional[Tuple[int, int]]

    def __bool__(self) -> bool:
        return self.holds


SetLike = Union[ElementSet, Iterable[int]]


def _ids(seed: SetLike) -> List[int]:
    if isinstance(seed, ElementSet):
        return list(seed.members)
    return sorted(set(int(x) for x in seed))


def cyclic_multiples(shape: GroupShape, g: int) -> List[int]:
    out = [0]
    m = g
    while m != 0:
        out.append(m)
        m = shape.add(m, g)
    return out


def extend_span(shape: GroupShape, members: FrozenSet[int], g: int) -> FrozenSet[int]:
    if g in members:
        return members
    cyc = cyclic_multiples(shape, g)
    return frozenset(shape.add(h, c) for h in members for c in cyc)


def span_ids(shape: GroupShape, seeds: Iterable[int]) -> Tuple[FrozenSet[int], Tuple[int, ...]]:
    """Subgroup generated by ``seeds`` plus the least-id irredundant generators used."""
    members: FrozenSet[int] = frozenset((0,))
    used: List[int] = []
    for g in sorted(set(seeds)):
        if g in members:
            continue
        members = extend_span(shape, members, g)
        used.append(g)
    return members, tuple(used)


def element_set(ring: FiniteRing, members: Iterable[int]) -> ElementSet:
    return ElementSet(ring, tuple(members))


def subgroup(ring: FiniteRing, members: Iterable[int], generators: Iterable[int] = ()) -> AdditiveSubgroup:
    return AdditiveSubgroup(ring, tuple(members), tuple(generators))


def whole(ring: FiniteRing) -> AdditiveSubgroup:
    return AdditiveSubgroup(ring, tuple(range(ring.cardinality)), ring.basis)


def additive_span(ring: FiniteRing, seed: SetLike) -> AdditiveSubgroup:
    seeds = _ids(seed)
    members, _ = span_ids(ring.shape, seeds)
    return AdditiveSubgroup(ring, tuple(members), tuple(seeds))


def index(ring: FiniteRing, A: AdditiveSubgroup) -> int:
    return ring.cardinality // len(A.members)


def _domain(ring: FiniteRing, within: Optional[AdditiveSubgroup]) -> Tuple[Sequence[int], Tuple[int, ...]]:
    if within is None:
        return range(ring.cardinality), ring.basis
    return within.members, within.spanning_set


def _reduced(ring: FiniteRing, S: SetLike) -> Tuple[int, ...]:
    # Centralizers and annihilators are additive in S, so a generating set suffices.
    if isinstance(S, AdditiveSubgroup):
        return S.spanning_set
    _, gens = span_ids(ring.shape, _ids(S))
    return gens


def centralizer(ring: FiniteRing, S: SetLike, within: Optional[AdditiveSubgroup] = None) -> AdditiveSubgroup:
    gens = _reduced(ring, S)
    domain, _ = _domain(ring, within)
    members = [y for y in domain if all(ring.bracket(s, y) == 0 for s in gens)]
    return AdditiveSubgroup(ring, tuple(members), gens)


def right_annihilator(ring: FiniteRing, S: SetLike, within: Optional[AdditiveSubgroup] = None) -> AdditiveSubgroup:
    if ring.flavor != "associative":
        raise FlavorMismatch("right_annihilator", ring.flavor)
    gens = _reduced(ring, S)
    domain, _ = _domain(ring, within)
    members = [y for y in domain if all(ring.mul(s, y) == 0 for s in gens)]
    return AdditiveSubgroup(ring, tuple(members), gens)


def left_annihilator(ring: FiniteRing, S: SetLike, within: Optional[AdditiveSubgroup] = None) -> AdditiveSubgroup:
    if ring.flavor != "associative":
        raise FlavorMismatch("left_annihilator", ring.flavor)
    gens = _reduced(ring, S)
    domain, _ = _domain(ring, within)
    members = [y for y in domain if all(ring.mul(y, s) == 0 for s in gens)]
    return AdditiveSubgroup(ring, tuple(members), gens)


def _image(ring: FiniteRing, fn: Callable[[int], int], within: Optional[AdditiveSubgroup]) -> ElementSet:
    # Image of an additive homomorphism: spanned by the images of generators.
    _, gens = _domain(ring, within)
    members, _ = span_ids(ring.shape, (fn(g) for g in gens))
    return ElementSet(ring, tuple(members))


def commutator_set(ring: FiniteRing, a: int, within: Optional[AdditiveSubgroup] = None) -> ElementSet:
    """[L, a] = {[y, a] : y in L} (or y in ``within``)."""
    return _image(ring, lambda y: ring.bracket(y, a), within)


def right_multiples(ring: FiniteRing, a: int, within: Optional[AdditiveSubgroup] = None) -> ElementSet:
    """aR = {a·y : y in R}."""
    if ring.flavor != "associative":
        raise FlavorMismatch("right_multiples", ring.flavor)
    return _image(ring, lambda y: ring.mul(a, y), within)


def left_multiples(ring: FiniteRing, a: int, within: Optional[AdditiveSubgroup] = None) -> ElementSet:
    """Ra = {y·a : y in R}."""
    if ring.flavor != "associative":
        raise FlavorMismatch("left_multiples", ring.flavor)
    return _image(ring, lambda y: ring.mul(y, a), within)


def _pairwise(
    ring: FiniteRing, A: SetLike, B: SetLike, fn: Callable[[int, int], int], what: str, cap: int
) -> ElementSet:
    a_ids, b_ids = _ids(A), _ids(B)
    require_within(what, ring.cardinality, cap)
    return ElementSet(ring, tuple({fn(a, b) for a in a_ids for b in b_ids}))


def product_set(ring: FiniteRing, A: SetLike, B: SetLike, cap: int = DEFAULT_CAPS.pair_order) -> ElementSet:
    if ring.flavor != "associative":
        raise FlavorMismatch("product_set", ring.flavor)
    return _pairwise(ring, A, B, ring.mul, "product_set", cap)


def bracket_set(ring: FiniteRing, A: SetLike, B: SetLike, cap: int = DEFAULT_CAPS.pair_order) -> ElementSet:
    return _pairwise(ring, A, B, ring.bracket, "bracket_set", cap)


def _side_products(ring: FiniteRing, kind: IdealKind) -> Callable[[int, int], Tuple[int, ...]]:
    if kind == "lie":
        return lambda w, e: (ring.bracket(e, w),)
    if ring.flavor != "associative":
        raise FlavorMismatch(f"{kind} ideal", ring.flavor)
    if kind == "left":
        return lambda w, e: (ring.mul(e, w),)
    if kind == "right":
        return lambda w, e: (ring.mul(w, e),)
    return lambda w, e: (ring.mul(e, w), ring.mul(w, e))


def closure(ring: FiniteRing, A: SetLike, kind: IdealKind) -> IdealClosure:
    """Smallest ideal of ``kind`` containing A, with the witnesses b_1..b_s.

    Each round multiplies the current frontier by every basis generator on the
    required sides, adds the products (in least-id order) that enlarge the span,
    and makes those the next frontier. The witnesses are every frontier element,
    so the ideal equals span(A) + sum of op(R, b_i).
    """
    shape = ring.shape
    products = _side_products(ring, kind)
    members, gens = span_ids(shape, _ids(A))
    frontier = list(gens)
    witnesses: List[int] = []
    all_gens = list(gens)
    while frontier:
        witnesses.extend(frontier)
        candidates = sorted({p for w in frontier for e in ring.basis for p in products(w, e)})
        frontier = []
        for c in candidates:
            if c not in members:
                members = extend_span(shape, members, c)
                frontier.append(c)
                all_gens.append(c)
    ideal = AdditiveSubgroup(ring, tuple(members), tuple(all_gens))
    return IdealClosure(ideal, tuple(witnesses))


def closure_left_ideal(ring: FiniteRing, A: SetLike) -> IdealClosure:
    return closure(ring, A, "left")


def closure_right_ideal(ring: FiniteRing, A: SetLike) -> IdealClosure:
    return closure(ring, A, "right")


def closure_two_sided(ring: FiniteRing, A: SetLike) -> IdealClosure:
    return closure(ring, A, "two_sided")


def closure_lie_ideal(ring: FiniteRing, A: SetLike) -> IdealClosure:
    return closure(ring, A, "lie")


def is_ideal(ring: FiniteRing, A: AdditiveSubgroup, kind: IdealKind) -> IdealCheck:
    """Basis-by-generator check; the witness is the offending (left factor, right factor)."""
    gens = A.spanning_set
    for e in ring.basis:
        for g in gens:
            if kind == "lie":
                if ring.bracket(e, g) not in A:
                    return IdealCheck(False, (e, g))
                continue
            if kind in ("left", "two_sided") and ring.mul(e, g) not in A:
                return IdealCheck(False, (e, g))
            if kind in ("right", "two_sided") and ring.mul(g, e) not in A:
                return IdealCheck(False, (g, e))
    return IdealCheck(True, None)


def transversal(ring: FiniteRing, A: AdditiveSubgroup, within: Optional[AdditiveSubgroup] = None) -> List[int]:
    """Least-id representative of each coset of A (in the ring, or in ``within``)."""
    domain, _ = _domain(ring, within)
    covered = set()
    reps: List[int] = []
    for x in domain:
        if x in covered:
            continue
        reps.append(x)
        covered.update(ring.add(x, a) for a in A.members)
    return reps


def enumerate_subgroups(
    ring: FiniteRing,
    kind: SubgroupKind = "additive",
    cap: int = DEFAULT_CAPS.oracle_order,
) -> List[AdditiveSubgroup]:
    """Every additive subgroup, or every ideal of ``kind``, ordered by (order, members)."""
    require_within("enumerate_subgroups", ring.cardinality, cap)

    def close(seeds: Iterable[int]) -> AdditiveSubgroup:
        if kind == "additive":
            return additive_span(ring, seeds)
        return closure(ring, seeds, kind).ideal

    start = close([0])
    seen = {start.members: start}
    queue = [start]
    while queue:
        H = queue.pop()
        for g in transversal(ring, H)[1:]:
            J = close(list(H.spanning_set) + [g])
            if J.members not in seen:
                seen[J.members] = J
                queue.append(J)
    return sorted(seen.values(), key=lambda H: (H.order, H.members))


def subgroup_record(A: AdditiveSubgroup) -> SubgroupRecord:
    return SubgroupRecord(
        members=list(A.members),
        generators=list(A.generators),
        order=A.order,
        index=A.index,
    )


__all__ = [
    "AdditiveSubgroup",
    "ElementSet",
    "IdealCheck",
    "IdealClosure",
    "additive_span",
    "bracket_set",
    "centralizer",
    "closure",
    "closure_left_ideal",
    "closure_lie_ideal",
    "closure_right_ideal",
    "closure_two_sided",
    "commutator_set",
    "enumerate_subgroups",
    "index",
    "is_ideal",
    "left_annihilator",
    "left_multiples",
    "product_set",
    "right_annihilator",
    "right_multiples",
    "span_ids",
    "subgroup_record",
    "transversal",
    "whole",
]
