"""
Persistence helpers for rings, subgroups and reports.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, List, Sequence

from pydantic import BaseModel, ValidationError

from .errors import IllFormed, RingMismatch
from .ring_core import FiniteRing, GroupShape, make_ring
from .schema import SCHEMA_VERSION, RingFile, SubsetFile
from .subobjects import AdditiveSubgroup, ElementSet, additive_span, element_set


def ring_file(ring: FiniteRing) -> RingFile:
    return RingFile(
        name=ring.name,
        flavor=ring.flavor,
        orders=list(ring.orders),
        table=[[list(vec) for vec in row] for row in ring.table],
    )


def save_ring(ring: FiniteRing, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(ring_file(ring).model_dump_json(indent=2))
        f.write("\n")


def _read_json(path: Path) -> dict:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    with path.open("r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise IllFormed("schema", (), f"{path} is not valid JSON: {e}") from e


def load_ring(path: Path) -> FiniteRing:
    payload = _read_json(path)
    try:
        spec = RingFile(**payload)
    except ValidationError as e:
        raise IllFormed("schema", (), f"Invalid ring file {path}: {e}") from e
    orders = [int(d) for d in spec.orders]
    if orders == sorted(orders):
        return make_ring(GroupShape(tuple(orders)), spec.table, flavor=spec.flavor, name=spec.name)
    return make_ring(orders, spec.table, flavor=spec.flavor, name=spec.name)


def save_subset(ring: FiniteRing, A: ElementSet, path: Path) -> None:
    record = SubsetFile(
        ring_name=ring.name,
        ring_hash=ring.content_hash,
        kind="subgroup" if isinstance(A, AdditiveSubgroup) else "set",
        members=list(A.members),
        generators=list(A.generators) if isinstance(A, AdditiveSubgroup) else [],
    )
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(record.model_dump_json(indent=2))
        f.write("\n")


def load_subset(ring: FiniteRing, path: Path) -> ElementSet:
    """Subgroup files are bound to the ring they were computed in by its content hash."""
    payload = _read_json(path)
    try:
        record = SubsetFile(**payload)
    except ValidationError as e:
        raise IllFormed("schema", (), f"Invalid subset file {path}: {e}") from e
    if record.ring_hash != ring.content_hash:
        raise RingMismatch(ring.content_hash, record.ring_hash)
    out_of_range = [x for x in record.members if not 0 <= x < ring.cardinality]
    if out_of_range:
        raise IllFormed("coefficient_range", out_of_range[:1], "element id outside the ring")
    if record.kind == "set":
        return element_set(ring, record.members)
    A = additive_span(ring, record.members)
    if A.order != len(set(record.members)):
        raise IllFormed("schema", (), f"{path} members do not form an additive subgroup")
    return A


def write_report(report: BaseModel, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(report.model_dump_json(indent=2))
        f.write("\n")


def write_csv(path: Path, kind: str, header: Sequence[str], rows: Iterable[Sequence[object]]) -> int:
    """CSV with a leading ``# ringprob <kind> schema_version=N`` comment line."""
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", encoding="utf-8", newline="") as f:
        f.write(f"# ringprob {kind} schema_version={SCHEMA_VERSION}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    return count


def read_csv(path: Path) -> List[dict]:
    with path.open("r", encoding="utf-8", newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    return list(csv.DictReader(lines))


__all__ = [
    "load_ring",
    "load_subset",
    "read_csv",
    "ring_file",
    "save_ring",
    "save_subset",
    "write_csv",
    "write_report",
]
