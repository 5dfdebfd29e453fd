from __future__ import annotations

from fractions import Fraction

import pytest

from ringprob.errors import CapExceeded, FlavorMismatch
from ringprob.probability import (
    annihilator_index,
    annihilator_profile,
    centralizer_index,
    commuting_pairs_bruteforce,
    commuting_probability,
    cp_consistency,
    format_rational,
    opposite_profile_matches,
    parse_rational,
    zero_pairs_bruteforce,
    zero_probability,
    zero_probability_left,
)
from ringprob.ring_core import associated_lie_ring

from conftest import E12, family


def test_commutative_and_zero_rings_have_cp_one(z6, zero4):
    assert commuting_probability(z6) == 1
    assert commuting_probability(zero4) == 1
    assert zero_probability(zero4) == 1


def test_z4_zero_probability_is_half(z4):
    assert zero_probability(z4) == Fraction(1, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_zero_probability(p):
    assert zero_probability(family(f"cyclic:{p}")) == Fraction(2 * p - 1, p * p)


def test_matrix_ring_values(m2f2):
    # Scalars commute with all 16 elements, every other matrix with 4.
    assert commuting_probability(m2f2) == Fraction(11, 32)
    assert commuting_probability(m2f2) * 256 == commuting_pairs_bruteforce(m2f2)
    assert zero_probability(m2f2) * 256 == zero_pairs_bruteforce(m2f2)


def test_triangular_ring_reaches_five_eighths(t2f2):
    assert commuting_probability(t2f2) == Fraction(5, 8)


def test_orbit_indices(m2f2):
    assert centralizer_index(m2f2, E12) == 4
    assert annihilator_index(m2f2, 0) == 1


def test_zero_probability_counted_either_way(m2f2, t2f2, opposite_idempotent):
    for ring in (m2f2, t2f2, opposite_idempotent):
        assert zero_probability(ring) == zero_probability_left(ring)


def test_zero_probability_needs_multiplication(m2f2):
    with pytest.raises(FlavorMismatch):
        zero_probability(associated_lie_ring(m2f2))


def test_probability_caps(m2f2):
    with pytest.raises(CapExceeded):
        commuting_probability(m2f2, cap=8)
    with pytest.raises(CapExceeded):
        commuting_pairs_bruteforce(m2f2, cap=8)


def test_cp_agrees_with_associated_lie_ring(t2f2):
    result = cp_consistency(t2f2)
    assert result["consistent"]
    assert result["cp"] == Fraction(5, 8)


def test_annihilator_profile_sides(opposite_idempotent):
    profile = annihilator_profile(opposite_idempotent)
    assert profile["max_right_annihilator_index"] == 2
    assert profile["max_left_annihilator_index"] == 4
    assert opposite_profile_matches(opposite_idempotent)


def test_annihilator_profile_for_lie_ring(m2f2):
    profile = annihilator_profile(associated_lie_ring(m2f2))
    assert profile["max_right_annihilator_index"] is None
    assert profile["max_centralizer_index"] == 4


def test_rational_formatting_round_trips():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("11/32") == Fraction(11, 32)
