from __future__ import annotations

import json

import pytest

from ringprob.errors import IllFormed, RingMismatch
from ringprob.storage import load_ring, load_subset, read_csv, save_ring, save_subset, write_csv
from ringprob.subobjects import AdditiveSubgroup, additive_span, element_set

from conftest import T11, T12


def _write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def test_ring_round_trip(tmp_path, m2f2, opposite_idempotent):
    for ring in (m2f2, opposite_idempotent):
        path = tmp_path / f"{ring.name}.json"
        save_ring(ring, path)
        loaded = load_ring(path)
        assert loaded == ring
        assert loaded.content_hash == ring.content_hash


def test_unsorted_orders_are_normalized(tmp_path):
    path = _write(
        tmp_path / "z3z2.json",
        {"name": "z3+z2", "orders": [3, 2], "table": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]},
    )
    ring = load_ring(path)
    assert ring.orders == (2, 3)
    assert ring.permutation == (1, 0)
    assert ring.cardinality == 6


@pytest.mark.parametrize(
    "payload,reason",
    [
        ({"orders": [2]}, "schema"),
        ({"orders": [2, 2], "table": [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]}, "associativity"),
        ({"orders": [2, 2], "table": [[[0, 1]]]}, "arity"),
        ({"orders": [2], "table": [[[1]]], "flavor": "jordan"}, "schema"),
    ],
)
def test_malformed_ring_files(tmp_path, payload, reason):
    path = _write(tmp_path / "bad.json", payload)
    with pytest.raises(IllFormed) as exc:
        load_ring(path)
    assert exc.value.reason == reason


def test_unreadable_ring_files(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(IllFormed):
        load_ring(path)
    with pytest.raises(FileNotFoundError):
        load_ring(tmp_path / "missing.json")


def test_subset_round_trip(tmp_path, t2f2):
    A = additive_span(t2f2, [T11, T12])
    path = tmp_path / "ideal.json"
    save_subset(t2f2, A, path)
    loaded = load_subset(t2f2, path)
    assert isinstance(loaded, AdditiveSubgroup)
    assert loaded.members == A.members

    X = element_set(t2f2, [0, T11])
    save_subset(t2f2, X, path)
    assert load_subset(t2f2, path).members == (0, T11)


def test_subset_bound_to_its_ring(tmp_path, t2f2, m2f2):
    path = tmp_path / "ideal.json"
    save_subset(t2f2, additive_span(t2f2, [T12]), path)
    with pytest.raises(RingMismatch):
        load_subset(m2f2, path)


@pytest.mark.parametrize("members,reason", [([0, 1, 2], "schema"), ([0, 99], "coefficient_range")])
def test_subset_contents_are_checked(tmp_path, t2f2, members, reason):
    path = _write(
        tmp_path / "subset.json",
        {"ring_name": t2f2.name, "ring_hash": t2f2.content_hash, "members": members},
    )
    with pytest.raises(IllFormed) as exc:
        load_subset(t2f2, path)
    assert exc.value.reason == reason


def test_csv_carries_a_schema_comment(tmp_path):
    path = tmp_path / "out" / "scan.csv"
    count = write_csv(path, "scan", ["ring", "cp"], [["cyclic:4", "1"], ["matrix:2", "11/32"]])
    assert count == 2
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# ringprob scan schema_version=1"
    assert lines[1] == "ring,cp"
    assert read_csv(path) == [{"ring": "cyclic:4", "cp": "1"}, {"ring": "matrix:2", "cp": "11/32"}]
