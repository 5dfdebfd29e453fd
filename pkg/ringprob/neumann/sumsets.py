"""
Sumsets in the additive group and Eberhard's generation lemma:
for X symmetric with 0 in X, <X> = X^{3r} once (r + 1)|X| > |G|.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Union

from ..errors import SymmetryViolated
from ..ring_core import FiniteRing, GroupShape
from ..subobjects import ElementSet, span_ids


@dataclass(frozen=True)
class EberhardResult:
    r: int
    verified: bool
    generation_length: int
    span_order: int
    set_order: int


GroupLike = Union[GroupShape, FiniteRing]


def _shape(G: GroupLike) -> GroupShape:
    return G.shape if isinstance(G, FiniteRing) else G


def _members(X: Union[ElementSet, Iterable[int]]) -> FrozenSet[int]:
    return X.member_set if isinstance(X, ElementSet) else frozenset(int(x) for x in X)


def check_symmetric(G: GroupLike, X: Union[ElementSet, Iterable[int]]) -> None:
    shape = _shape(G)
    members = _members(X)
    if 0 not in members:
        raise SymmetryViolated(None, missing_zero=True)
    for x in sorted(members):
        if shape.neg(x) not in members:
            raise SymmetryViolated(x)


def sumset(G: GroupLike, A: Iterable[int], B: Iterable[int]) -> FrozenSet[int]:
    shape = _shape(G)
    B = list(B)
    return frozenset(shape.add(a, b) for a in A for b in B)


def iterated_sumset(G: GroupLike, X: Iterable[int], m: int) -> FrozenSet[int]:
    """X + X + ... + X with m summands (m >= 1)."""
    X = list(X)
    out = frozenset(X)
    for _ in range(m - 1):
        nxt = sumset(G, out, X)
        if nxt == out:
            # S -> S + X has reached a fixed point.
            break
        out = nxt
    return out


def word_lengths(G: GroupLike, X: Union[ElementSet, Iterable[int]]) -> Dict[int, int]:
    """Least number of summands from X needed for each element of <X>; 0 has length 0."""
    shape = _shape(G)
    members = sorted(_members(X))
    lengths = {0: 0}
    frontier = [x for x in members if x != 0]
    for x in frontier:
        lengths[x] = 1
    depth = 1
    while frontier:
        depth += 1
        nxt = set()
        for f in frontier:
            for x in members:
                z = shape.add(f, x)
                if z not in lengths:
                    nxt.add(z)
        frontier = sorted(nxt)
        for z in frontier:
            lengths[z] = depth
    return lengths


def minimal_r(group_order: int, set_order: int) -> int:
    """Least r >= 1 with (r + 1)|X| > |G|."""
    return max(1, group_order // set_order)


def eberhard_generation(G: GroupLike, X: Union[ElementSet, Iterable[int]]) -> EberhardResult:
    shape = _shape(G)
    check_symmetric(shape, X)
    members = _members(X)
    r = minimal_r(shape.cardinality, len(members))
    lengths = word_lengths(shape, members)
    span, _ = span_ids(shape, members)
    # X^{3r} is the set of elements of word length <= 3r, since 0 is in X.
    reached = frozenset(z for z, m in lengths.items() if m <= 3 * r)
    generation = max(1, max(lengths.values()))
    return EberhardResult(
        r=r,
        verified=reached == span,
        generation_length=generation,
        span_order=len(span),
        set_order=len(members),
    )


def generation_length(G: GroupLike, X: Union[ElementSet, Iterable[int]]) -> int:
    """Least m >= 1 with X^m = <X>, for X containing 0."""
    return max(1, max(word_lengths(G, X).values()))


__all__ = [
    "EberhardResult",
    "check_symmetric",
    "eberhard_generation",
    "generation_length",
    "iterated_sumset",
    "minimal_r",
    "sumset",
    "word_lengths",
]
