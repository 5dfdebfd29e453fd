from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringprob.errors import FlavorMismatch, IllFormed
from ringprob.ring_core import (
    Element,
    GroupShape,
    add,
    associated_lie_ring,
    axiom_violations,
    bracket,
    is_commutative,
    make_ring,
    mul,
    neg,
    opposite_ring,
    smul,
)

from conftest import E11, E12, E21, E22, family


def test_shape_rejects_small_orders():
    with pytest.raises(IllFormed) as exc:
        GroupShape((1, 2))
    assert exc.value.reason == "shape"
    assert exc.value.indices == (0,)


def test_mixed_radix_ids_first_coordinate_least_significant():
    shape = GroupShape((2, 3))
    assert shape.cardinality == 6
    assert shape.decode(5) == (1, 2)
    assert shape.encode((1, 2)) == 5
    assert shape.basis_id(1) == 2


def test_raw_orders_are_normalized_with_permutation():
    # Z_3 + Z_2 with e_1 e_1 = e_1 on the Z_3 part only.
    ring = make_ring([3, 2], [[[1, 0], [0, 0]], [[0, 0], [0, 0]]])
    assert ring.orders == (2, 3)
    assert ring.permutation == (1, 0)
    one = ring.as_id((0, 1))
    assert ring.mul(one, one) == one


def test_well_definedness_violation_names_indices():
    # Z_2 + Z_4 with e_1 e_1 = e_2 is not well defined: 2 e_1 = 0 but 2 e_2 != 0.
    with pytest.raises(IllFormed) as exc:
        make_ring(GroupShape((2, 4)), [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    assert exc.value.reason == "well_definedness"
    assert exc.value.indices == (0, 0)


def test_associativity_violation_is_reported():
    # e1e1 = e2, e1e2 = e1 on F_2^2: (e1e1)e1 = e2e1 = 0 but e1(e1e1) = e1e2 = e1.
    with pytest.raises(IllFormed) as exc:
        make_ring(GroupShape((2, 2)), [[[0, 1], [1, 0]], [[0, 0], [0, 0]]])
    assert exc.value.reason == "associativity"


def test_coefficient_out_of_range():
    with pytest.raises(IllFormed) as exc:
        make_ring(GroupShape((2,)), [[[2]]])
    assert exc.value.reason == "coefficient_range"
    assert exc.value.indices == (0, 0, 0)


def test_lie_flavor_checks_antisymmetry():
    with pytest.raises(IllFormed) as exc:
        make_ring(GroupShape((3,)), [[[1]]], flavor="lie")
    assert exc.value.reason == "antisymmetry"


def test_matrix_bracket_e11_e12():
    m2 = family("matrix:2")
    assert bracket(m2, E11, E12) == Element(E12, (0, 1, 0, 0))
    assert mul(m2, E12, E21).id == E11
    assert mul(m2, E21, E12).id == E22


def test_element_api_accepts_coordinates():
    z6 = family("cyclic:6")
    assert add(z6, 5, 3).id == 2
    assert neg(z6, (1,)).id == 5
    assert smul(z6, 4, 5).id == 2


def test_lie_ring_has_no_multiplication():
    lie = associated_lie_ring(family("matrix:2"))
    assert lie.flavor == "lie"
    with pytest.raises(FlavorMismatch):
        lie.mul(1, 2)
    assert lie.bracket(E11, E12) == E12


def test_is_commutative_returns_witness():
    assert is_commutative(family("cyclic:5")) == (True, None)
    ok, pair = is_commutative(family("triangular:2"))
    assert not ok
    assert pair is not None


def test_opposite_ring_reverses_products():
    m2 = family("matrix:2")
    op = opposite_ring(m2)
    assert op.mul(E12, E21) == m2.mul(E21, E12)


def test_content_hash_ignores_name_and_detects_tables():
    a = family("cyclic:4")
    b = make_ring(GroupShape((4,)), [[[1]]], name="other")
    c = make_ring(GroupShape((4,)), [[[2]]])
    assert a.content_hash == b.content_hash
    assert a.content_hash != c.content_hash


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15)))
def test_matrix_ring_axioms_hold_elementwise(triple):
    assert axiom_violations(family("matrix:2"), [triple]) == []


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15)))
def test_associated_lie_ring_satisfies_jacobi(triple):
    lie = associated_lie_ring(family("matrix:2"))
    assert axiom_violations(lie, [triple]) == []


def test_e21_e22_product():
    m2 = family("matrix:2")
    assert m2.mul(E21, E11) == E21
    assert m2.mul(E22, E21) == E21
