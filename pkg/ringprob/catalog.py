"""
Sources of test rings: parametric families and exhaustive small-shape enumeration.

Enumeration walks every structure table over a shape. Candidate c encodes the
products e_i e_j as base-|G| digits (position i*k + j, least significant
first). Chunks of candidates are filtered with numpy, well-definedness first
and then one associativity triple at a time; survivors are rebuilt and
validated by ``make_ring``. Counts are of validated tables, never of
isomorphism classes.
"""
from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CapExceeded, IllFormed, require_within
from .probability import commuting_probability, zero_probability
from .ring_core import FiniteRing, GroupShape, is_commutative, make_ring
from .schema import DEFAULT_CAPS

FAMILIES = ("cyclic", "zero", "matrix", "triangular", "sum")
MAX_FAMILY_ORDER = 4096
MAX_FAMILY_PRIME = 31
CHUNK = 1 << 15

ProgressFn = Optional[Callable[[int], None]]


# ---------- Families ----------


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Tuple[int, ...] = ()
    parts: Tuple["FamilySpec", ...] = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family == "sum":
            if len(self.parts) != 2:
                raise ValueError("a direct sum takes exactly two parts")
            return
        if len(self.params) != 1:
            raise ValueError(f"family {self.family} takes one integer parameter")
        (n,) = self.params
        if self.family in ("cyclic", "zero"):
            if not 2 <= n <= MAX_FAMILY_ORDER:
                raise ValueError(f"n must lie in [2, {MAX_FAMILY_ORDER}], got {n}")
        elif not (_is_prime(n) and n <= MAX_FAMILY_PRIME):
            raise ValueError(f"p must be a prime at most {MAX_FAMILY_PRIME}, got {n}")

    @property
    def label(self) -> str:
        if self.family == "sum":
            return f"{self.parts[0].label}+{self.parts[1].label}"
        return f"{self.family}:{self.params[0]}"


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def _prime_factors(n: int) -> List[int]:
    out, q = [], 2
    while q * q <= n:
        while n % q == 0:
            out.append(q)
            n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


_TOKEN = re.compile(r"^(cyclic|zero|matrix|triangular):(\d+)$")


def parse_family(text: str) -> FamilySpec:
    """``cyclic:6``, ``zero:8``, ``matrix:2``, ``triangular:3`` or ``A+B`` for a direct sum."""
    text = text.strip()
    if "+" in text:
        left, right = text.split("+", 1)
        return FamilySpec("sum", parts=(parse_family(left), parse_family(right)))
    match = _TOKEN.match(text)
    if not match:
        raise ValueError(f"Cannot parse family spec {text!r}")
    return FamilySpec(match.group(1), (int(match.group(2)),))


def _unit(k: int, i: int) -> List[int]:
    vec = [0] * k
    vec[i] = 1
    return vec


def _matrix_table(units: Sequence[Tuple[int, int]]) -> List[List[List[int]]]:
    # E_ab E_cd = [b == c] E_ad, restricted to the listed matrix units.
    k = len(units)
    where = {u: i for i, u in enumerate(units)}
    table = []
    for a, b in units:
        row = []
        for c, d in units:
            row.append(_unit(k, where[(a, d)]) if b == c else [0] * k)
        table.append(row)
    return table


def build_family(spec: FamilySpec) -> FiniteRing:
    kind = spec.family
    if kind == "sum":
        left, right = (build_family(p) for p in spec.parts)
        k1, k2 = left.k, right.k
        orders = list(left.orders) + list(right.orders)
        table = []
        for i in range(k1 + k2):
            row = []
            for j in range(k1 + k2):
                if i < k1 and j < k1:
                    row.append(list(left.table[i][j]) + [0] * k2)
                elif i >= k1 and j >= k1:
                    row.append([0] * k1 + list(right.table[i - k1][j - k1]))
                else:
                    row.append([0] * (k1 + k2))
            table.append(row)
        return make_ring(orders, table, name=spec.label)
    (n,) = spec.params
    if kind == "cyclic":
        return make_ring(GroupShape((n,)), [[[1]]], name=spec.label)
    if kind == "zero":
        orders = _prime_factors(n)
        k = len(orders)
        return make_ring(GroupShape(tuple(orders)), [[[0] * k for _ in range(k)] for _ in range(k)], name=spec.label)
    if kind == "matrix":
        units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    else:
        units = [(1, 1), (1, 2), (2, 2)]
    return make_ring(GroupShape((n,) * len(units)), _matrix_table(units), name=spec.label)


# ---------- Exhaustive enumeration ----------


def candidate_count(shape: GroupShape) -> int:
    return shape.cardinality ** (shape.rank**2)


def _surviving(orders: Tuple[int, ...], start: int, stop: int) -> np.ndarray:
    """Candidate indices in [start, stop) whose tables are well defined and associative."""
    k = len(orders)
    N = prod(orders)
    d = np.array(orders, dtype=np.int64)
    radix = np.cumprod([1] + list(orders[:-1])).astype(np.int64)
    idx = np.arange(start, stop, dtype=np.int64)
    places = N ** np.arange(k * k, dtype=np.int64)
    digits = (idx[:, None] // places) % N
    T = ((digits[:, :, None] // radix) % d).reshape(-1, k, k, k)

    alive = (
        ((d[:, None, None] * T) % d[None, None, :] == 0)
        & ((d[None, :, None] * T) % d[None, None, :] == 0)
    ).reshape(len(idx), -1).all(axis=1)
    for i, j, l in product(range(k), repeat=3):
        rows = np.nonzero(alive)[0]
        if rows.size == 0:
            break
        t = T[rows]
        left = np.einsum("cm,cmt->ct", t[:, i, j, :], t[:, :, l, :]) % d
        right = np.einsum("cm,cmt->ct", t[:, j, l, :], t[:, i, :, :]) % d
        alive[rows[~(left == right).all(axis=1)]] = False
    return idx[alive]


def _scan_chunk(args: Tuple[Tuple[int, ...], int, int]) -> List[int]:
    orders, start, stop = args
    return [int(c) for c in _surviving(orders, start, stop)]


def candidate_table(shape: GroupShape, candidate: int) -> List[List[List[int]]]:
    k, N = shape.rank, shape.cardinality
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            digit = (candidate // N ** (i * k + j)) % N
            row.append(list(shape.decode(digit)))
        table.append(row)
    return table


def surviving_candidates(
    shape: GroupShape,
    jobs: int = 1,
    cap: int = DEFAULT_CAPS.enumeration_candidates,
    progress: ProgressFn = None,
) -> List[int]:
    total = candidate_count(shape)
    require_within(f"enumeration of shape {list(shape.orders)}", total, cap)
    chunks = [(shape.orders, start, min(start + CHUNK, total)) for start in range(0, total, CHUNK)]
    found: List[int] = []
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, chunks):
                found.extend(part)
                if progress:
                    progress(1)
    else:
        for chunk in chunks:
            found.extend(_scan_chunk(chunk))
            if progress:
                progress(1)
    return sorted(found)


def chunk_count(shape: GroupShape) -> int:
    return -(-candidate_count(shape) // CHUNK)


def enumerate_shape(
    shape: GroupShape,
    jobs: int = 1,
    cap: int = DEFAULT_CAPS.enumeration_candidates,
    progress: ProgressFn = None,
) -> Iterator[Tuple[int, FiniteRing]]:
    """Every associative ring table over ``shape``, by increasing candidate index."""
    label = "x".join(str(d) for d in shape.orders)
    for c in surviving_candidates(shape, jobs=jobs, cap=cap, progress=progress):
        yield c, make_ring(shape, candidate_table(shape, c), name=f"{label}#{c}")


def enumerate_order4(shape: Sequence[int]) -> Iterator[FiniteRing]:
    orders = tuple(int(d) for d in shape)
    if orders not in ((4,), (2, 2)):
        raise CapExceeded(f"order-4 enumeration of shape {list(orders)}", prod(orders), 4)
    for _, ring in enumerate_shape(GroupShape(orders)):
        yield ring


def parse_shape(text: str) -> GroupShape:
    """``4``, ``2,2`` or ``[2,2,2]``."""
    body = text.strip().strip("[]")
    try:
        orders = [int(part) for part in body.split(",") if part.strip()]
    except ValueError as e:
        raise IllFormed("shape", (), f"cannot parse shape {text!r}") from e
    if not orders:
        raise IllFormed("shape", (), "empty shape")
    return GroupShape(tuple(orders))


# ---------- Census ----------


@dataclass(frozen=True)
class CensusRow:
    candidate_index: int
    ring: FiniteRing
    commutative: bool
    cp: Fraction
    zp: Fraction


def census_row(candidate: int, ring: FiniteRing) -> CensusRow:
    return CensusRow(
        candidate_index=candidate,
        ring=ring,
        commutative=is_commutative(ring)[0],
        cp=commuting_probability(ring),
        zp=zero_probability(ring),
    )


def census(
    shape: GroupShape,
    jobs: int = 1,
    cap: int = DEFAULT_CAPS.enumeration_candidates,
    progress: ProgressFn = None,
) -> List[CensusRow]:
    return [census_row(c, ring) for c, ring in enumerate_shape(shape, jobs=jobs, cap=cap, progress=progress)]


@dataclass(frozen=True)
class Landmark:
    """Where the noncommutative rings of a census sit relative to cp = 5/8."""

    rings: int
    noncommutative: int
    max_noncommutative_cp: Optional[Fraction]
    attained_by: Optional[str]
    violators: Tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.violators

    @property
    def attained(self) -> bool:
        return self.max_noncommutative_cp == Fraction(5, 8)


LANDMARK = Fraction(5, 8)


def gustafson_landmark(rings: Sequence[FiniteRing]) -> Landmark:
    """Every ring with cp above 5/8 must be commutative; report the best noncommutative cp."""
    best: Optional[Tuple[Fraction, str]] = None
    violators: List[str] = []
    noncommutative = 0
    for ring in rings:
        if is_commutative(ring)[0]:
            continue
        noncommutative += 1
        cp = commuting_probability(ring)
        if cp > LANDMARK:
            violators.append(ring.name or ring.content_hash)
        if best is None or cp > best[0]:
            best = (cp, ring.name or ring.content_hash)
    return Landmark(
        rings=len(rings),
        noncommutative=noncommutative,
        max_noncommutative_cp=best[0] if best else None,
        attained_by=best[1] if best else None,
        violators=tuple(violators),
    )


__all__ = [
    "CensusRow",
    "FAMILIES",
    "FamilySpec",
    "LANDMARK",
    "Landmark",
    "build_family",
    "candidate_count",
    "candidate_table",
    "census",
    "census_row",
    "chunk_count",
    "enumerate_order4",
    "enumerate_shape",
    "gustafson_landmark",
    "parse_family",
    "parse_shape",
    "surviving_candidates",
]
