from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringprob.catalog import enumerate_order4
from ringprob.errors import CapExceeded, FlavorMismatch
from ringprob.ring_core import associated_lie_ring, opposite_ring
from ringprob.subobjects import (
    additive_span,
    bracket_set,
    centralizer,
    closure_left_ideal,
    closure_lie_ideal,
    closure_right_ideal,
    closure,
    closure_two_sided,
    commutator_set,
    enumerate_subgroups,
    index,
    is_ideal,
    left_annihilator,
    left_multiples,
    product_set,
    right_annihilator,
    right_multiples,
    span_ids,
    subgroup_record,
    transversal,
    whole,
)

from conftest import E11, E12, E21, E22, T11, T12, T22, family


def test_additive_span_of_cyclic_generator(z6):
    A = additive_span(z6, [2])
    assert A.members == (0, 2, 4)
    assert A.index == 2
    assert index(z6, A) == 2


def test_span_ids_drops_redundant_generators(z6):
    members, gens = span_ids(z6.shape, [2, 4, 3])
    assert len(members) == 6
    assert gens == (2, 3)


def test_centralizer_of_empty_set_is_whole_ring(m2f2):
    assert centralizer(m2f2, []).order == 16


def test_centralizer_in_commutative_ring(z6):
    assert centralizer(z6, [1, 5]).order == 6


def test_centralizer_of_e11_is_diagonal(m2f2):
    C = centralizer(m2f2, [E11])
    assert C.members == (0, E11, E22, E11 + E22)


def test_commutator_set_of_e12(m2f2):
    orbit = commutator_set(m2f2, E12)
    assert orbit.members == (0, E12, E11 + E22, E11 + E12 + E22)
    assert commutator_set(m2f2, E11 + E22).members == (0,)


def test_commutator_set_is_zero_in_abelian_lie_ring(zero4):
    lie = associated_lie_ring(zero4)
    assert all(commutator_set(lie, x).members == (0,) for x in lie.elements())


def test_right_and_left_multiples_in_z4(z4):
    assert right_multiples(z4, 2).members == (0, 2)
    assert left_multiples(z4, 1).members == (0, 1, 2, 3)


def test_annihilators_on_both_sides(opposite_idempotent):
    ring = opposite_idempotent
    e1, e2 = ring.basis
    # e2 e1 = e2, so e1 is not in the right annihilator of e2.
    assert right_annihilator(ring, [e2]).members == (0, e2)
    assert left_annihilator(ring, [e1]).members == (0,)


def test_annihilator_needs_associative(m2f2):
    with pytest.raises(FlavorMismatch):
        right_annihilator(associated_lie_ring(m2f2), [1])


def test_annihilator_within_domain(z4):
    D = additive_span(z4, [2])
    assert right_annihilator(z4, [2], within=D).members == (0, 2)


def test_product_and_bracket_sets(t2f2):
    prods = product_set(t2f2, whole(t2f2), whole(t2f2))
    assert set(prods.members) == set(t2f2.elements())
    brackets = bracket_set(t2f2, whole(t2f2), whole(t2f2))
    assert brackets.members == (0, T12)


def test_closures_and_witnesses(t2f2):
    left = closure_left_ideal(t2f2, [T11])
    assert left.ideal.members == (0, T11)
    right = closure_right_ideal(t2f2, [T11])
    assert right.ideal.members == (0, T11, T12, T11 + T12)
    both = closure_two_sided(t2f2, [T22])
    assert both.ideal.members == (0, T12, T22, T12 + T22)
    assert T22 in both.witnesses


def test_lie_closure_in_matrix_ring(m2f2):
    clo = closure_lie_ideal(m2f2, [E12])
    assert is_ideal(m2f2, clo.ideal, "lie")
    assert clo.ideal.members == (0, E12, E11 + E22, E11 + E12 + E22)
    assert E21 not in clo.ideal


def test_is_ideal_returns_witness(t2f2):
    B = additive_span(t2f2, [T22])
    check = is_ideal(t2f2, B, "left")
    assert not check
    assert check.witness == (T12, T22)
    assert is_ideal(t2f2, B, "right")


def test_transversal_least_representatives(z6):
    A = additive_span(z6, [3])
    assert transversal(z6, A) == [0, 1, 2]


def test_transversal_within_domain(m2f2):
    D = additive_span(m2f2, [E11, E22])
    C = additive_span(m2f2, [E11 + E22])
    assert transversal(m2f2, C, within=D) == [0, E11]


def test_enumerate_additive_subgroups_of_z6(z6):
    subs = enumerate_subgroups(z6)
    assert [s.members for s in subs] == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]


def test_enumerate_two_sided_ideals_of_m2f2(m2f2):
    ideals = enumerate_subgroups(m2f2, kind="two_sided")
    assert [I.order for I in ideals] == [1, 16]


def test_enumerate_subgroups_cap(m2f2):
    with pytest.raises(CapExceeded):
        enumerate_subgroups(m2f2, cap=8)


def test_subgroup_record_fields(z6):
    rec = subgroup_record(additive_span(z6, [2]))
    assert rec.members == [0, 2, 4]
    assert rec.order == 3
    assert rec.index == 2


def test_centralizer_of_swap_matrix(m2f2):
    C = centralizer(m2f2, [E12 + E21])
    assert C.members == (0, E12 + E21, E11 + E22, E11 + E12 + E21 + E22)


def test_pair_sets_respect_an_explicit_cap(m2f2):
    with pytest.raises(CapExceeded):
        product_set(m2f2, [E11], [E12], cap=8)
    with pytest.raises(CapExceeded):
        bracket_set(m2f2, [E11], [E12], cap=8)
    assert product_set(m2f2, [E11], [E12], cap=16).members == (E12,)


# ---------- Invariants over a fixed collection of small rings ----------

PROPERTY_RINGS = [
    family("matrix:2"),
    family("triangular:2"),
    family("cyclic:12"),
    *enumerate_order4([4]),
    *enumerate_order4([2, 2]),
]


def _ring_with(draw_ids):
    return st.sampled_from(PROPERTY_RINGS).flatmap(
        lambda R: st.tuples(st.just(R), draw_ids(st.integers(0, R.cardinality - 1)))
    )


ring_and_element = _ring_with(lambda ids: ids)
ring_and_ids = _ring_with(lambda ids: st.lists(ids, max_size=4))
ring_and_nested_ids = _ring_with(lambda ids: st.tuples(st.lists(ids, max_size=3), st.lists(ids, max_size=3)))


@settings(max_examples=80, deadline=None)
@given(ring_and_element)
def test_orbit_times_kernel_is_ring_order(case):
    R, a = case
    n = R.cardinality
    assert len(commutator_set(R, a)) * centralizer(R, [a]).order == n
    assert len(right_multiples(R, a)) * right_annihilator(R, [a]).order == n
    assert len(left_multiples(R, a)) * left_annihilator(R, [a]).order == n


@settings(max_examples=80, deadline=None)
@given(ring_and_element)
def test_commutator_set_of_negative_is_negated(case):
    R, a = case
    negated = {R.neg(x) for x in commutator_set(R, a)}
    assert commutator_set(R, R.neg(a)).member_set == negated


@settings(max_examples=60, deadline=None)
@given(ring_and_nested_ids, st.sampled_from(["left", "right", "two_sided", "lie"]))
def test_closure_is_idempotent_monotone_and_an_ideal(case, kind):
    R, (small, extra) = case
    D = closure(R, small, kind).ideal
    assert set(small) <= D.member_set
    assert is_ideal(R, D, kind)
    assert closure(R, D, kind).ideal.members == D.members
    bigger = closure(R, small + extra, kind).ideal
    assert D.member_set <= bigger.member_set


@settings(max_examples=60, deadline=None)
@given(ring_and_ids)
def test_left_annihilator_is_right_annihilator_of_opposite(case):
    R, S = case
    assert left_annihilator(R, S).members == right_annihilator(opposite_ring(R), S).members


@settings(max_examples=60, deadline=None)
@given(ring_and_ids)
def test_transversal_partitions_ring_with_least_representatives(case):
    R, seeds = case
    A = additive_span(R, seeds)
    reps = transversal(R, A)
    assert len(reps) == A.index
    cosets = [{R.add(r, a) for a in A.members} for r in reps]
    assert sorted(x for coset in cosets for x in coset) == list(R.elements())
    assert all(r == min(coset) for r, coset in zip(reps, cosets))
