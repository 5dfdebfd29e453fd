from __future__ import annotations

from fractions import Fraction

import pytest

from ringprob.errors import CapExceeded, NonIdealInput
from ringprob.neumann.gaps import gap_row
from ringprob.neumann.oracle import (
    brute_force_optimal_ideal,
    converse_lower_bound,
    derived_span_size,
    objective_value,
)
from ringprob.probability import commuting_probability, zero_probability
from ringprob.ring_core import associated_lie_ring
from ringprob.subobjects import additive_span, enumerate_subgroups, whole

from conftest import T11, family


@pytest.mark.parametrize(
    "objective,expected",
    [("max", (5,)), ("sum", (8,)), ("lex", (3, 5))],
)
def test_objective_value(objective, expected):
    assert objective_value(3, 5, objective) == expected


def test_cyclic_oracle(z4):
    best = brute_force_optimal_ideal(z4, mode="zp")
    assert best.ideal.members == (0, 2)
    assert best.value == (2,)
    assert best.candidates == 3
    assert brute_force_optimal_ideal(z4, mode="zp", objective="sum").ideal.members == (0, 2)
    lex = brute_force_optimal_ideal(z4, mode="zp", objective="lex")
    assert lex.index == 1
    assert lex.value == (1, 4)


def test_zero_ring_oracle_is_the_whole_ring(zero4):
    best = brute_force_optimal_ideal(zero4, mode="zp")
    assert best.ideal.order == 4
    assert best.value == (1,)


def test_matrix_lie_oracle(m2f2):
    lie = associated_lie_ring(m2f2)
    best = brute_force_optimal_ideal(lie, mode="cp")
    assert best.value == (2,)
    assert best.index == 2


def test_oracle_respects_cap(m2f2):
    with pytest.raises(CapExceeded):
        brute_force_optimal_ideal(m2f2, mode="zp", cap=8)


def test_converse_bound_on_the_even_ideal(z4):
    D = additive_span(z4, [2])
    assert derived_span_size(z4, D, "zp") == 1
    assert converse_lower_bound(z4, D, "zp") == Fraction(1, 4)
    assert converse_lower_bound(z4, whole(z4), "zp") == Fraction(1, 4)


def test_converse_bound_needs_an_ideal(t2f2):
    B = additive_span(t2f2, [T11])
    with pytest.raises(NonIdealInput):
        converse_lower_bound(t2f2, B, "zp")
    with pytest.raises(NonIdealInput):
        converse_lower_bound(associated_lie_ring(t2f2), B, "cp")


@pytest.mark.parametrize("text", ["cyclic:6", "matrix:2", "triangular:2", "zero:8"])
def test_converse_bound_holds_on_every_ideal(text):
    ring = family(text)
    lie = associated_lie_ring(ring)
    cp = commuting_probability(lie)
    for D in enumerate_subgroups(lie, kind="lie"):
        assert cp >= converse_lower_bound(lie, D, "cp")
    zp = zero_probability(ring)
    for D in enumerate_subgroups(ring, kind="two_sided"):
        assert zp >= converse_lower_bound(ring, D, "zp")


def test_gap_row_on_cyclic_rings(z4):
    row = gap_row(z4, mode="zp")
    assert row.valid
    assert row.extracted_value == [4]
    assert row.oracle_value == [2]
    assert row.gap == 2
    assert row.feasible

    row = gap_row(family("cyclic:8"), mode="zp")
    assert row.index_d == 2
    assert row.oracle_index == 2
    assert row.gap == 0


def test_gap_row_skips_the_oracle_above_the_cap(m2f2):
    row = gap_row(m2f2, mode="cp", oracle_cap=8)
    assert row.cp == "11/32"
    assert row.zp == "29/128"
    assert row.oracle_value is None
    assert row.gap is None
