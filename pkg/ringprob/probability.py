"""
Exact commuting and zero-product probabilities.

cp(R) = |{(x, y) : [x, y] = 0}| / |R|^2 is computed as sum_x |C(x)| / |R|^2 and
zp(R) = |{(x, y) : xy = 0}| / |R|^2 as sum_x |Ann(x)| / |R|^2, where the
kernel sizes come from the first isomorphism theorem: |C(x)| = |R| / |[R, x]|
and |Ann(x)| = |R| / |xR|. The double-loop definitions are kept as oracles.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .errors import FlavorMismatch, require_within
from .ring_core import FiniteRing, associated_lie_ring, opposite_ring
from .schema import DEFAULT_CAPS
from .subobjects import centralizer, commutator_set, left_multiples, right_multiples

Rational = Fraction


def centralizer_index(ring: FiniteRing, x: int) -> int:
    return len(commutator_set(ring, x))


def annihilator_index(ring: FiniteRing, x: int) -> int:
    return len(right_multiples(ring, x))


def left_annihilator_index(ring: FiniteRing, x: int) -> int:
    return len(left_multiples(ring, x))


def commuting_probability(ring: FiniteRing, cap: int = DEFAULT_CAPS.max_order) -> Fraction:
    require_within("commuting_probability", ring.cardinality, cap)
    n = ring.cardinality
    total = sum(n // centralizer_index(ring, x) for x in ring.elements())
    return Fraction(total, n * n)


def zero_probability(ring: FiniteRing, cap: int = DEFAULT_CAPS.max_order) -> Fraction:
    if ring.flavor != "associative":
        raise FlavorMismatch("zero_probability", ring.flavor)
    require_within("zero_probability", ring.cardinality, cap)
    n = ring.cardinality
    total = sum(n // annihilator_index(ring, x) for x in ring.elements())
    return Fraction(total, n * n)


def zero_probability_left(ring: FiniteRing, cap: int = DEFAULT_CAPS.max_order) -> Fraction:
    """zp counted by columns: sum_y |{x : xy = 0}|."""
    if ring.flavor != "associative":
        raise FlavorMismatch("zero_probability", ring.flavor)
    require_within("zero_probability", ring.cardinality, cap)
    n = ring.cardinality
    total = sum(n // left_annihilator_index(ring, y) for y in ring.elements())
    return Fraction(total, n * n)


def commuting_pairs_bruteforce(ring: FiniteRing, cap: int = DEFAULT_CAPS.pair_order) -> int:
    require_within("commuting_pairs_bruteforce", ring.cardinality, cap)
    return sum(1 for x in ring.elements() for y in ring.elements() if ring.bracket(x, y) == 0)


def zero_pairs_bruteforce(ring: FiniteRing, cap: int = DEFAULT_CAPS.pair_order) -> int:
    require_within("zero_pairs_bruteforce", ring.cardinality, cap)
    return sum(1 for x in ring.elements() for y in ring.elements() if ring.mul(x, y) == 0)


def cp_consistency(ring: FiniteRing, cap: int = DEFAULT_CAPS.max_order) -> Dict[str, object]:
    """cp(R) against cp of the associated Lie ring and the bracket-zero pair count."""
    direct = commuting_probability(ring, cap)
    lie = ring if ring.flavor == "lie" else associated_lie_ring(ring)
    via_lie = commuting_probability(lie, cap)
    n = ring.cardinality
    # In a Lie ring cp and zp coincide; count y with [x, y] = 0 by scanning.
    bracket_zero = Fraction(sum(len(centralizer(lie, [x])) for x in lie.elements()), n * n)
    return {
        "cp": direct,
        "cp_lie": via_lie,
        "bracket_zero": bracket_zero,
        "consistent": direct == via_lie == bracket_zero,
    }


def annihilator_profile(ring: FiniteRing, cap: int = DEFAULT_CAPS.max_order) -> Dict[str, Optional[int]]:
    """Maximal centralizer index, and maximal right/left annihilator index.

    The left maximum equals the right maximum of the opposite ring; the two
    are reported side by side.
    """
    require_within("annihilator_profile", ring.cardinality, cap)
    profile: Dict[str, Optional[int]] = {
        "max_centralizer_index": max(centralizer_index(ring, x) for x in ring.elements()),
        "max_right_annihilator_index": None,
        "max_left_annihilator_index": None,
    }
    if ring.flavor == "associative":
        profile["max_right_annihilator_index"] = max(
            annihilator_index(ring, x) for x in ring.elements()
        )
        profile["max_left_annihilator_index"] = max(
            left_annihilator_index(ring, x) for x in ring.elements()
        )
    return profile


def opposite_profile_matches(ring: FiniteRing) -> bool:
    op = opposite_ring(ring)
    left = max(left_annihilator_index(ring, x) for x in ring.elements())
    right_op = max(annihilator_index(op, x) for x in op.elements())
    return left == right_op


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


__all__ = [
    "Rational",
    "annihilator_index",
    "annihilator_profile",
    "centralizer_index",
    "commuting_pairs_bruteforce",
    "commuting_probability",
    "cp_consistency",
    "format_rational",
    "left_annihilator_index",
    "opposite_profile_matches",
    "parse_rational",
    "zero_pairs_bruteforce",
    "zero_probability",
    "zero_probability_left",
]
