from __future__ import annotations

from fractions import Fraction

import pytest

from ringprob.errors import FlavorMismatch, ProofAssertionFailed
from ringprob.neumann.extraction import derivations, extract_commuting_ideal, extract_zero_ideal, x_set
from ringprob.ring_core import associated_lie_ring
from ringprob.schema import ExtractionSettings
from ringprob.subobjects import additive_span, is_ideal, subgroup

from conftest import T11, T12, family


def _failed(report):
    return [r.name for r in report.assertion_log if r.status == "fail"]


@pytest.fixture(scope="module")
def z8():
    return family("cyclic:8")


def test_zero_ring_is_its_own_ideal(zero4):
    for report in (extract_commuting_ideal(zero4), extract_zero_ideal(zero4)):
        assert report.valid, _failed(report)
        assert report.index_d == 1
        assert report.witness_generators == []
        assert report.square_or_bracket_span_size == 1
        assert report.converse_bound == "1"


def test_cyclic_zero_product(z4):
    report = extract_zero_ideal(z4)
    assert report.valid, _failed(report)
    assert report.epsilon == "1/2"
    assert report.x_set == [0, 1, 2, 3]
    assert report.index_d == 1
    assert report.square_or_bracket_span_size == 4
    assert report.converse_bound == "1/4"


def test_cyclic_eight_keeps_the_even_ideal(z8):
    report = extract_zero_ideal(z8)
    assert report.valid, _failed(report)
    assert report.epsilon == "5/16"
    assert report.x_set == [0, 2, 4, 6]
    assert report.b.members == [0, 2, 4, 6]
    assert report.index_b == 2
    assert report.d.members == [0, 2, 4, 6]
    assert report.witness_generators == [2]
    assert report.index_d == 2
    assert report.square_or_bracket_span_size == 2
    assert report.converse_bound == "1/8"
    assert report.construction.a == 2
    assert report.construction.c.members == [0, 4]


def test_epsilon_override_can_break_the_lower_bound(z8):
    report = extract_zero_ideal(z8, Fraction(1), strict=False)
    assert not report.valid
    assert report.x_set == [0, 4]
    assert _failed(report)[0] == "x_lower_bound"
    assert any("epsilon overridden" in note for note in report.notes)

    with pytest.raises(ProofAssertionFailed) as exc:
        extract_zero_ideal(z8, Fraction(1))
    assert exc.value.name == "x_lower_bound"


@pytest.mark.parametrize("eps", [Fraction(0), Fraction(3, 2), Fraction(-1, 2)])
def test_epsilon_must_be_a_probability(z4, eps):
    with pytest.raises(ValueError):
        extract_zero_ideal(z4, eps)


def test_matrix_ring_commuting_extraction(m2f2):
    report = extract_commuting_ideal(m2f2)
    assert report.valid, _failed(report)
    assert report.source_flavor == "associative"
    assert report.epsilon == "11/32"
    assert report.index_d == 1
    assert report.square_or_bracket_span_size == 8
    assert report.converse_bound == "1/8"
    assert any("associated Lie ring" in note for note in report.notes)


def test_matrix_ring_zero_extraction(m2f2):
    report = extract_zero_ideal(m2f2)
    assert report.epsilon == "29/128"
    D = subgroup(m2f2, report.d.members)
    assert is_ideal(m2f2, D, "two_sided")
    # M2(F_2) is simple.
    assert report.index_d in (1, 16)


def test_lie_input_gives_the_same_commuting_ideal(m2f2):
    lie = associated_lie_ring(m2f2)
    direct = extract_commuting_ideal(lie)
    via_ring = extract_commuting_ideal(m2f2)
    assert direct.source_flavor == "lie"
    assert direct.d.members == via_ring.d.members
    assert direct.assertion_log == via_ring.assertion_log


def test_triangular_commuting_extraction(t2f2):
    report = extract_commuting_ideal(t2f2)
    assert report.valid, _failed(report)
    assert report.epsilon == "5/8"
    assert report.square_or_bracket_span_size <= 2


def test_zero_extraction_needs_multiplication(m2f2):
    with pytest.raises(FlavorMismatch):
        extract_zero_ideal(associated_lie_ring(m2f2))


def test_x_set_is_symmetric(m2f2):
    for mode in ("cp", "zp"):
        ring = associated_lie_ring(m2f2) if mode == "cp" else m2f2
        X = x_set(ring, Fraction(1, 4), mode)
        assert 0 in X
        assert all(ring.neg(x) in X for x in X)


def test_derivations_cover_the_left_closure(t2f2):
    B = additive_span(t2f2, [T12])
    table = list(derivations(t2f2, B, [T11]))
    assert [y for y, _ in table] == [0, T12, T11, T11 + T12]
    assert dict(table) == {
        0: (0, (0,)),
        T12: (T12, (0,)),
        T11: (0, (T11,)),
        T11 + T12: (T12, (T11,)),
    }
    for y, (b, coeffs) in table:
        total = b
        for a, w in zip(coeffs, [T11]):
            total = t2f2.add(total, t2f2.mul(a, w))
        assert total == y


def test_bookkeeping_does_not_change_the_report(z8):
    fast = extract_zero_ideal(z8, settings=ExtractionSettings(bookkeeping=True))
    slow = extract_zero_ideal(z8, settings=ExtractionSettings(bookkeeping=False))
    assert fast.model_dump() == slow.model_dump()
