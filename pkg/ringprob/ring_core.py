"""
Finite associative rings and finite Lie rings given by structure constants.

The additive group is a direct sum of cyclic groups Z_{d_1} + ... + Z_{d_k}
with d_1 <= ... <= d_k. Elements are identified by a mixed-radix integer id
(first coordinate least significant), and every tie-break in the package is
"least id".
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Literal, Optional, Sequence, Tuple, Union

from .errors import FlavorMismatch, IllFormed

Flavor = Literal["associative", "lie"]
FLAVORS = ("associative", "lie")

Coords = Tuple[int, ...]
Table = Tuple[Tuple[Coords, ...], ...]

# Coordinate tuples are tabulated up front for groups at most this large.
_COORD_TABLE_LIMIT = 1 << 16


@dataclass(frozen=True, order=True)
class Element:
    id: int
    coords: Coords = field(compare=False)

    def __index__(self) -> int:
        return self.id

    def __int__(self) -> int:
        return self.id


ElementLike = Union[Element, int, Sequence[int]]


@dataclass(frozen=True)
class GroupShape:
    """Additive group Z_{d_1} + ... + Z_{d_k}, orders sorted non-decreasing."""

    orders: Tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(d) for d in self.orders)
        object.__setattr__(self, "orders", orders)
        bad = [i for i, d in enumerate(orders) if d < 2]
        if bad:
            raise IllFormed("shape", bad, "every cyclic order must be at least 2")
        if list(orders) != sorted(orders):
            raise IllFormed("shape", (), f"orders {list(orders)} are not sorted")

    @classmethod
    def normalized(cls, orders: Sequence[int]) -> Tuple["GroupShape", Tuple[int, ...]]:
        """Sort orders stably; return the shape and the permutation used.

        ``perm[a]`` is the user coordinate that becomes normalized coordinate ``a``.
        """
        orders = [int(d) for d in orders]
        bad = [i for i, d in enumerate(orders) if d < 2]
        if bad:
            raise IllFormed("shape", bad, "every cyclic order must be at least 2")
        perm = tuple(sorted(range(len(orders)), key=lambda i: (orders[i], i)))
        return cls(tuple(orders[i] for i in perm)), perm

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def cardinality(self) -> int:
        size = 1
        for d in self.orders:
            size *= d
        return size

    @cached_property
    def _radix(self) -> Tuple[int, ...]:
        weights = []
        w = 1
        for d in self.orders:
            weights.append(w)
            w *= d
        return tuple(weights)

    @cached_property
    def _coord_table(self) -> Optional[List[Coords]]:
        if self.cardinality > _COORD_TABLE_LIMIT:
            return None
        return [self._decode(i) for i in range(self.cardinality)]

    def _decode(self, x: int) -> Coords:
        out = []
        for d in self.orders:
            x, r = divmod(x, d)
            out.append(r)
        return tuple(out)

    def decode(self, x: int) -> Coords:
        table = self._coord_table
        if table is not None:
            return table[x]
        return self._decode(x)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != self.rank:
            raise IllFormed("arity", (), f"expected {self.rank} coordinates, got {len(coords)}")
        return sum((c % d) * w for c, d, w in zip(coords, self.orders, self._radix))

    def reduce(self, coords: Sequence[int]) -> int:
        return sum((c % d) * w for c, d, w in zip(coords, self.orders, self._radix))

    def add(self, x: int, y: int) -> int:
        xc, yc = self.decode(x), self.decode(y)
        return sum(((a + b) % d) * w for a, b, d, w in zip(xc, yc, self.orders, self._radix))

    def sub(self, x: int, y: int) -> int:
        xc, yc = self.decode(x), self.decode(y)
        return sum(((a - b) % d) * w for a, b, d, w in zip(xc, yc, self.orders, self._radix))

    def neg(self, x: int) -> int:
        return sum(((-a) % d) * w for a, d, w in zip(self.decode(x), self.orders, self._radix))

    def smul(self, n: int, x: int) -> int:
        return sum(((n * a) % d) * w for a, d, w in zip(self.decode(x), self.orders, self._radix))

    def basis_id(self, i: int) -> int:
        return self._radix[i]

    def element(self, x: ElementLike) -> Element:
        x = self.as_id(x)
        return Element(x, self.decode(x))

    def as_id(self, x: ElementLike) -> int:
        if isinstance(x, Element):
            return x.id
        if isinstance(x, int):
            if not 0 <= x < self.cardinality:
                raise IllFormed("coefficient_range", (x,), "element id out of range")
            return x
        coords = tuple(x)
        if len(coords) != self.rank:
            raise IllFormed("arity", (), f"expected {self.rank} coordinates, got {len(coords)}")
        for i, (c, d) in enumerate(zip(coords, self.orders)):
            if not 0 <= c < d:
                raise IllFormed("coefficient_range", (i,), f"coordinate {c} not in [0, {d})")
        return self.encode(coords)


@dataclass(frozen=True)
class FiniteRing:
    """Validated ring; build through :func:`make_ring`, never directly."""

    shape: GroupShape
    table: Table
    flavor: Flavor = "associative"
    name: str = ""
    permutation: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return self.shape.rank

    @property
    def cardinality(self) -> int:
        return self.shape.cardinality

    @property
    def orders(self) -> Tuple[int, ...]:
        return self.shape.orders

    @cached_property
    def basis(self) -> Tuple[int, ...]:
        return tuple(self.shape.basis_id(i) for i in range(self.k))

    @cached_property
    def _terms(self) -> Tuple[Tuple[int, int, Tuple[Tuple[int, int], ...]], ...]:
        terms = []
        for i, row in enumerate(self.table):
            for j, vec in enumerate(row):
                nz = tuple((l, c) for l, c in enumerate(vec) if c)
                if nz:
                    terms.append((i, j, nz))
        return tuple(terms)

    @cached_property
    def content_hash(self) -> str:
        payload = json.dumps(
            {"flavor": self.flavor, "orders": list(self.orders), "table": _table_lists(self.table)},
            separators=(",", ":"),
            sort_keys=True,
        ).encode("utf-8")
        return hashlib.blake2s(payload, digest_size=16).hexdigest()

    def _bilinear(self, x: int, y: int) -> int:
        xc = self.shape.decode(x)
        yc = self.shape.decode(y)
        acc = [0] * self.k
        for i, j, nz in self._terms:
            c = xc[i] * yc[j]
            if c:
                for l, v in nz:
                    acc[l] += c * v
        return self.shape.reduce(acc)

    def add(self, x: int, y: int) -> int:
        return self.shape.add(x, y)

    def sub(self, x: int, y: int) -> int:
        return self.shape.sub(x, y)

    def neg(self, x: int) -> int:
        return self.shape.neg(x)

    def smul(self, n: int, x: int) -> int:
        return self.shape.smul(n, x)

    def mul(self, x: int, y: int) -> int:
        if self.flavor != "associative":
            raise FlavorMismatch("mul", self.flavor)
        return self._bilinear(x, y)

    def bracket(self, x: int, y: int) -> int:
        if self.flavor == "lie":
            return self._bilinear(x, y)
        return self.shape.sub(self._bilinear(x, y), self._bilinear(y, x))

    def op(self, x: int, y: int) -> int:
        """The ring's native product: multiplication, or the bracket for Lie rings."""
        return self._bilinear(x, y)

    def elements(self) -> range:
        return range(self.cardinality)

    def element(self, x: ElementLike) -> Element:
        return self.shape.element(x)

    def as_id(self, x: ElementLike) -> int:
        return self.shape.as_id(x)

    def label(self) -> str:
        return self.name or f"ring-{self.content_hash[:8]}"


def _table_lists(table: Table) -> List[List[List[int]]]:
    return [[list(vec) for vec in row] for row in table]


def _coerce_table(shape: GroupShape, table) -> Table:
    k = shape.rank
    if len(table) != k:
        raise IllFormed("arity", (), f"table has {len(table)} rows, expected {k}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != k:
            raise IllFormed("arity", (i,), f"row {i} has {len(row)} entries, expected {k}")
        out_row = []
        for j, entry in enumerate(row):
            if isinstance(entry, Element):
                vec = entry.coords
            elif isinstance(entry, int):
                vec = shape.decode(shape.as_id(entry))
            else:
                vec = tuple(int(c) for c in entry)
            if len(vec) != k:
                raise IllFormed("arity", (i, j), f"entry has {len(vec)} coefficients, expected {k}")
            for l, (c, d) in enumerate(zip(vec, shape.orders)):
                if not 0 <= c < d:
                    raise IllFormed(
                        "coefficient_range", (i, j, l), f"coefficient {c} not in [0, {d})"
                    )
            out_row.append(tuple(vec))
        rows.append(tuple(out_row))
    return tuple(rows)


def _permute_table(table, perm: Sequence[int]) -> list:
    return [
        [[table[perm[a]][perm[b]][perm[c]] for c in range(len(perm))] for b in range(len(perm))]
        for a in range(len(perm))
    ]


def _check_well_defined(shape: GroupShape, table: Table) -> None:
    orders = shape.orders
    for i, row in enumerate(table):
        for j, vec in enumerate(row):
            for l, c in enumerate(vec):
                if (orders[i] * c) % orders[l] or (orders[j] * c) % orders[l]:
                    raise IllFormed(
                        "well_definedness",
                        (i, j),
                        f"d_{i}·e_{i}e_{j} or d_{j}·e_{i}e_{j} is nonzero in coordinate {l}",
                    )


def _check_associative(ring: FiniteRing) -> None:
    basis = ring.basis
    prod = [[ring.shape.encode(vec) for vec in row] for row in ring.table]
    for i in range(ring.k):
        for j in range(ring.k):
            for l in range(ring.k):
                left = ring._bilinear(prod[i][j], basis[l])
                right = ring._bilinear(basis[i], prod[j][l])
                if left != right:
                    raise IllFormed("associativity", (i, j, l), "(e_i e_j) e_l != e_i (e_j e_l)")


def _check_lie(ring: FiniteRing) -> None:
    shape = ring.shape
    prod = [[shape.encode(vec) for vec in row] for row in ring.table]
    for i in range(ring.k):
        if prod[i][i]:
            raise IllFormed("antisymmetry", (i, i), "[e_i, e_i] != 0")
        for j in range(i + 1, ring.k):
            if shape.add(prod[i][j], prod[j][i]):
                raise IllFormed("antisymmetry", (i, j), "[e_i, e_j] != -[e_j, e_i]")
    basis = ring.basis
    for i in range(ring.k):
        for j in range(ring.k):
            for l in range(ring.k):
                total = shape.add(
                    ring._bilinear(prod[i][j], basis[l]),
                    shape.add(
                        ring._bilinear(prod[j][l], basis[i]),
                        ring._bilinear(prod[l][i], basis[j]),
                    ),
                )
                if total:
                    raise IllFormed("jacobi", (i, j, l), "Jacobi sum is nonzero")


def make_ring(
    shape: Union[GroupShape, Sequence[int]],
    table,
    flavor: Flavor = "associative",
    name: str = "",
) -> FiniteRing:
    """Validate and build a ring.

    ``shape`` may be a raw order list; it is then sorted non-decreasing and the
    table's rows, columns and coefficient positions are permuted to match. The
    permutation is kept on ``FiniteRing.permutation``.
    """
    if flavor not in FLAVORS:
        raise IllFormed("schema", (), f"unknown flavor {flavor!r}")
    if isinstance(shape, GroupShape):
        perm = tuple(range(shape.rank))
    else:
        raw = [int(d) for d in shape]
        if len(table) != len(raw) or any(len(row) != len(raw) for row in table):
            raise IllFormed("arity", (), f"table is not {len(raw)}x{len(raw)}")
        for i, row in enumerate(table):
            for j, entry in enumerate(row):
                if isinstance(entry, (int, Element)):
                    raise IllFormed("arity", (i, j), "raw order lists need coefficient vectors")
                if len(entry) != len(raw):
                    raise IllFormed("arity", (i, j), f"entry has {len(entry)} coefficients")
        shape, perm = GroupShape.normalized(raw)
        if perm != tuple(range(len(perm))):
            table = _permute_table(table, perm)
    coerced = _coerce_table(shape, table)
    _check_well_defined(shape, coerced)
    ring = FiniteRing(shape=shape, table=coerced, flavor=flavor, name=name, permutation=perm)
    if flavor == "associative":
        _check_associative(ring)
    else:
        _check_lie(ring)
    return ring


def add(ring: FiniteRing, x: ElementLike, y: ElementLike) -> Element:
    return ring.element(ring.add(ring.as_id(x), ring.as_id(y)))


def neg(ring: FiniteRing, x: ElementLike) -> Element:
    return ring.element(ring.neg(ring.as_id(x)))


def smul(ring: FiniteRing, n: int, x: ElementLike) -> Element:
    return ring.element(ring.smul(n, ring.as_id(x)))


def mul(ring: FiniteRing, x: ElementLike, y: ElementLike) -> Element:
    return ring.element(ring.mul(ring.as_id(x), ring.as_id(y)))


def bracket(ring: FiniteRing, x: ElementLike, y: ElementLike) -> Element:
    return ring.element(ring.bracket(ring.as_id(x), ring.as_id(y)))


def associated_lie_ring(ring: FiniteRing) -> FiniteRing:
    """The Lie ring (R, [x, y] = xy - yx) on the same additive group."""
    if ring.flavor != "associative":
        raise FlavorMismatch("associated_lie_ring", ring.flavor)
    basis = ring.basis
    table = [
        [ring.shape.decode(ring.bracket(basis[i], basis[j])) for j in range(ring.k)]
        for i in range(ring.k)
    ]
    name = f"lie({ring.name})" if ring.name else ""
    return make_ring(ring.shape, table, flavor="lie", name=name)


def opposite_ring(ring: FiniteRing) -> FiniteRing:
    if ring.flavor != "associative":
        raise FlavorMismatch("opposite_ring", ring.flavor)
    table = [[ring.table[j][i] for j in range(ring.k)] for i in range(ring.k)]
    name = f"op({ring.name})" if ring.name else ""
    return make_ring(ring.shape, table, flavor="associative", name=name)


def is_commutative(ring: FiniteRing) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Basis check of [e_i, e_j] = 0; returns the first non-commuting basis pair."""
    basis = ring.basis
    for i in range(ring.k):
        for j in range(i + 1, ring.k):
            if ring.bracket(basis[i], basis[j]):
                return False, (basis[i], basis[j])
    return True, None


def axiom_violations(ring: FiniteRing, triples: Iterable[Tuple[int, int, int]]) -> List[str]:
    """Element-level checks of distributivity, associativity / Jacobi on given triples."""
    failures: List[str] = []
    op = ring.op
    for x, y, z in triples:
        if op(x, ring.add(y, z)) != ring.add(op(x, y), op(x, z)):
            failures.append(f"left distributivity {x},{y},{z}")
        if op(ring.add(x, y), z) != ring.add(op(x, z), op(y, z)):
            failures.append(f"right distributivity {x},{y},{z}")
        if ring.flavor == "associative":
            if op(op(x, y), z) != op(x, op(y, z)):
                failures.append(f"associativity {x},{y},{z}")
        else:
            if op(x, x):
                failures.append(f"alternating {x}")
            if op(x, y) != ring.neg(op(y, x)):
                failures.append(f"antisymmetry {x},{y}")
            jac = ring.add(op(op(x, y), z), ring.add(op(op(y, z), x), op(op(z, x), y)))
            if jac:
                failures.append(f"jacobi {x},{y},{z}")
    return failures


__all__ = [
    "Element",
    "ElementLike",
    "FiniteRing",
    "Flavor",
    "GroupShape",
    "add",
    "associated_lie_ring",
    "axiom_violations",
    "bracket",
    "is_commutative",
    "make_ring",
    "mul",
    "neg",
    "opposite_ring",
    "smul",
]
