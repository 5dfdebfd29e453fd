"""
Exception hierarchy shared by every ringprob module.
"""
from __future__ import annotations

from typing import Any, Optional, Sequence, Tuple

ILL_FORMED_REASONS = (
    "shape",
    "arity",
    "coefficient_range",
    "well_definedness",
    "associativity",
    "antisymmetry",
    "jacobi",
    "schema",
)


class RingProbError(Exception):
    """Base class for all ringprob failures."""


class IllFormed(RingProbError):
    def __init__(self, reason: str, indices: Sequence[int] = (), detail: str = ""):
        if reason not in ILL_FORMED_REASONS:
            raise ValueError(f"Unknown IllFormed reason: {reason}")
        self.reason = reason
        self.indices: Tuple[int, ...] = tuple(indices)
        self.detail = detail
        msg = f"ill-formed ring ({reason})"
        if self.indices:
            msg += f" at basis indices {list(self.indices)}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class FlavorMismatch(RingProbError):
    def __init__(self, operation: str, flavor: str):
        self.operation = operation
        self.flavor = flavor
        super().__init__(f"{operation} is not defined for {flavor} rings.")


class CapExceeded(RingProbError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}.")


class SymmetryViolated(RingProbError):
    def __init__(self, witness: Optional[int], missing_zero: bool = False):
        self.witness = witness
        self.missing_zero = missing_zero
        if missing_zero:
            msg = "set does not contain 0"
        else:
            msg = f"set contains {witness} but not its negative"
        super().__init__(msg)


class NonIdealInput(RingProbError):
    def __init__(self, kind: str, witness: Any = None):
        self.kind = kind
        self.witness = witness
        super().__init__(f"input is not a {kind} ideal (counterexample {witness}).")


class ProofAssertionFailed(RingProbError):
    def __init__(self, name: str, witness: Any = None):
        self.name = name
        self.witness = witness
        super().__init__(f"proof step '{name}' failed (witness {witness}).")


class RingMismatch(RingProbError):
    def __init__(self, expected: str, found: str):
        self.expected = expected
        self.found = found
        super().__init__(f"subgroup file was written for ring {found}, not {expected}.")


def require_within(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(what, size, cap)


__all__ = [
    "CapExceeded",
    "FlavorMismatch",
    "IllFormed",
    "NonIdealInput",
    "ProofAssertionFailed",
    "RingMismatch",
    "RingProbError",
    "SymmetryViolated",
    "require_within",
]
