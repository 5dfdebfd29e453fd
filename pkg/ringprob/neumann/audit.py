"""
Assertion log shared by every proof pipeline.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, TypeVar

from ..errors import ProofAssertionFailed
from ..schema import AssertionRecord

T = TypeVar("T")


def jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return value


class AuditLog:
    def __init__(self) -> None:
        self.records: List[AssertionRecord] = []

    def check(self, name: str, ok: bool, witness: Any = None, detail: str = "") -> bool:
        self.records.append(
            AssertionRecord(
                name=name,
                status="pass" if ok else "fail",
                witness=jsonable(witness),
                detail=detail,
            )
        )
        return bool(ok)

    def extend(self, records: Iterable[AssertionRecord], prefix: str) -> None:
        for rec in records:
            self.records.append(rec.model_copy(update={"name": f"{prefix}{rec.name}"}))

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    def first_failure(self) -> Optional[AssertionRecord]:
        for r in self.records:
            if r.status == "fail":
                return r
        return None

    def raise_if_failed(self) -> None:
        failure = self.first_failure()
        if failure is not None:
            raise ProofAssertionFailed(failure.name, failure.witness)


def deterministic_sample(items: Sequence[T], k: int) -> List[T]:
    """Up to k evenly spaced items, always including the first."""
    if len(items) <= k:
        return list(items)
    step = len(items) / k
    return [items[int(i * step)] for i in range(k)]


__all__ = ["AuditLog", "deterministic_sample", "jsonable"]
