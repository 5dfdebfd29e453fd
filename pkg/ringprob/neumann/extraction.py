"""
Ideal extraction from a large commuting or zero-product probability.

Both pipelines share a front end: the elements with small orbit
(|[L, x]| or |xR| at most 2/eps) form a symmetric set X holding more than an
eps/2 share of the ring, so X generates a subgroup B of index at most 2/eps in
a bounded number of summands, and every b in B has a bounded orbit. The back
ends close B into an ideal D of no larger index and bound [D, D] or D^2.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, prod
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import FlavorMismatch, ProofAssertionFailed, SymmetryViolated, require_within
from ..probability import annihilator_index, centralizer_index, commuting_probability, format_rational, zero_probability
from ..ring_core import FiniteRing, associated_lie_ring
from ..schema import DEFAULT_CAPS, ExtractionReport, ExtractionSettings, Mode
from ..subobjects import (
    AdditiveSubgroup,
    ElementSet,
    additive_span,
    bracket_set,
    centralizer,
    closure_left_ideal,
    closure_lie_ideal,
    commutator_set,
    element_set,
    is_ideal,
    left_multiples,
    product_set,
    right_annihilator,
    span_ids,
    subgroup_record,
)
from .audit import AuditLog, deterministic_sample
from .constructions import bounded_commutator_construction, bounded_square_construction
from .descent import one_sided_to_two_sided
from .oracle import converse_lower_bound
from .sumsets import eberhard_generation, word_lengths

LogFn = Optional[Callable[[str], None]]
Derivation = Tuple[int, Tuple[int, ...]]


def _orbit_size(ring: FiniteRing, mode: Mode) -> Callable[[int], int]:
    if mode == "cp":
        return lambda x: centralizer_index(ring, x)
    return lambda x: annihilator_index(ring, x)


def x_set(ring: FiniteRing, epsilon: Fraction, mode: Mode = "cp") -> ElementSet:
    """Elements whose orbit has at most 2/eps elements."""
    threshold = 2 / Fraction(epsilon)
    size = _orbit_size(ring, mode)
    return element_set(ring, (x for x in ring.elements() if size(x) <= threshold))


class _FrontEnd:
    """Shared steps: X, B = <X>, Eberhard generation, orbit bounds over B."""

    def __init__(self, ring: FiniteRing, mode: Mode, epsilon: Fraction, audit: AuditLog, log: LogFn):
        self.ring = ring
        self.mode = mode
        self.epsilon = epsilon
        self.threshold = 2 / epsilon
        self.summand_bound = floor(6 / epsilon)
        self.orbit_bound = self.threshold**self.summand_bound
        size = _orbit_size(ring, mode)

        self.X = x_set(ring, epsilon, mode)
        n = ring.cardinality
        audit.check("x_contains_zero", 0 in self.X)
        asymmetric = next((x for x in self.X if ring.neg(x) not in self.X), None)
        audit.check("x_symmetric", asymmetric is None, asymmetric)
        audit.check(
            "x_lower_bound",
            (epsilon / 2) * n < len(self.X),
            {"size": len(self.X), "bound": epsilon / 2 * n},
        )

        self.B = additive_span(ring, self.X)
        audit.check("index_b_bound", self.B.index <= self.threshold, {"index": self.B.index, "bound": self.threshold})

        try:
            eb = eberhard_generation(ring, self.X)
            self.eberhard_r = eb.r
            self.eberhard_verified = eb.verified
            self.generation_length = eb.generation_length
        except SymmetryViolated as exc:
            self.eberhard_r = 0
            self.eberhard_verified = False
            self.generation_length = 0
            audit.check("eberhard_symmetric", False, exc.witness, str(exc))
        audit.check("eberhard_generation", self.eberhard_verified, {"r": self.eberhard_r})
        audit.check(
            "eberhard_length",
            3 * self.eberhard_r <= self.summand_bound,
            {"summands": 3 * self.eberhard_r, "bound": self.summand_bound},
        )

        self.orbits_b: Dict[int, int] = {b: size(b) for b in self.B.members}
        self.max_orbit_b = max(self.orbits_b.values())
        audit.check(
            "orbit_bound_over_b",
            self.max_orbit_b <= self.orbit_bound,
            {"max": self.max_orbit_b},
        )
        # Per-element form: |orbit(b)| <= floor(2/eps)^(word length of b).
        lengths = word_lengths(ring, self.X)
        base = floor(self.threshold)
        over = next((b for b in self.B.members if self.orbits_b[b] > base ** lengths[b]), None)
        audit.check("orbit_bound_by_word_length", over is None, over)
        if log:
            log(
                f"{mode}: eps={format_rational(epsilon)} |X|={len(self.X)} [R:B]={self.B.index} "
                f"r={self.eberhard_r} max orbit over B={self.max_orbit_b}"
            )

    def report_fields(self) -> Dict[str, object]:
        return {
            "epsilon": format_rational(self.epsilon),
            "threshold": format_rational(self.threshold),
            "x_set": list(self.X.members),
            "b": subgroup_record(self.B),
            "index_b": self.B.index,
            "eberhard_r": self.eberhard_r,
            "eberhard_verified": self.eberhard_verified,
            "generation_length": self.generation_length,
            "summand_bound": self.summand_bound,
            "orbit_bound": format_rational(Fraction(self.orbit_bound)),
            "max_orbit_over_b": self.max_orbit_b,
        }


def _finish(audit: AuditLog, report: ExtractionReport, strict: bool) -> ExtractionReport:
    report.assertion_log = audit.records
    report.valid = audit.passed
    if strict:
        audit.raise_if_failed()
    return report


def _resolve_epsilon(value: Fraction, epsilon: Optional[Fraction]) -> Fraction:
    if epsilon is None:
        return value
    eps = Fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    return eps


def extract_commuting_ideal(
    ring: FiniteRing,
    epsilon: Optional[Fraction] = None,
    *,
    settings: ExtractionSettings = ExtractionSettings(),
    strict: bool = True,
    log: LogFn = None,
) -> ExtractionReport:
    """Lie ideal D of bounded index with |[D, D]| bounded, for cp(L) >= eps.

    Associative input runs on its associated Lie ring. With ``strict`` the
    first failed assertion raises ProofAssertionFailed; otherwise the report
    comes back with ``valid=False``.
    """
    require_within("extract_commuting_ideal", ring.cardinality, DEFAULT_CAPS.max_order)
    notes: List[str] = []
    L = ring
    if ring.flavor == "associative":
        L = associated_lie_ring(ring)
        notes.append("run on the associated Lie ring [x, y] = xy - yx")
    cp = commuting_probability(L)
    eps = _resolve_epsilon(cp, epsilon)
    if eps != cp:
        notes.append(f"epsilon overridden: cp = {format_rational(cp)}")
    audit = AuditLog()
    front = _FrontEnd(L, "cp", eps, audit, log)
    B = front.B

    if B.order == L.cardinality:
        D, witnesses = B, ()
        notes.append("B is the whole ring; D = B with no witnesses")
    else:
        D, witnesses = closure_lie_ideal(L, B)
    audit.check("d_contains_b", B.member_set <= D.member_set)
    ideal = is_ideal(L, D, "lie")
    audit.check("d_is_ideal", bool(ideal), ideal.witness)

    orbits = [commutator_set(L, w) for w in witnesses]
    M = additive_span(L, [v for o in orbits for v in o.members])
    rebuilt, _ = span_ids(L.shape, list(B.spanning_set) + list(M.members))
    audit.check("d_decomposition", rebuilt == D.member_set)

    # C centralizes every witness, hence normalizes each [L, b_i].
    C = centralizer(L, witnesses)
    bad = None
    for i, orbit in enumerate(orbits):
        _, gens = span_ids(L.shape, orbit.members)
        for c in C.spanning_set:
            hit = next((m for m in gens if L.bracket(c, m) not in orbit), None)
            if hit is not None:
                bad = {"witness": witnesses[i], "c": c, "m": hit}
                break
        if bad:
            break
    audit.check("c_normalizes_orbits", bad is None, bad)

    CM = centralizer(L, M)
    chain = C.index * prod(C.order // centralizer(L, o, within=C).order for o in orbits)
    audit.check("centralizer_chain", CM.index <= chain, {"index": CM.index, "bound": chain})

    max_orbit_d = max(centralizer_index(L, d) for d in D.members)
    audit.check(
        "orbit_bound_over_d",
        max_orbit_d <= front.max_orbit_b * CM.index,
        {"max": max_orbit_d, "bound": front.max_orbit_b * CM.index},
    )
    audit.check(
        "index_d_bound",
        D.index <= B.index <= floor(front.threshold),
        {"index_d": D.index, "index_b": B.index},
    )

    construction = bounded_commutator_construction(L, within=D, log=log)
    audit.extend(construction.assertion_log, "construction.")
    brackets = bracket_set(L, D, D)
    span, _ = span_ids(L.shape, brackets.members)
    audit.check(
        "bracket_span_bound",
        len(span) <= int(construction.product_bound),
        {"span": len(span), "bound": construction.product_bound},
    )

    bound = Fraction(0)
    try:
        bound = converse_lower_bound(L, D, "cp")
        audit.check("converse_bound", True, format_rational(bound))
    except ProofAssertionFailed as exc:
        audit.check("converse_bound", False, exc.witness)
    if log:
        log(f"cp: [L:D]={D.index} |span [D,D]|={len(span)} witnesses={len(witnesses)}")

    report = ExtractionReport(
        ring_name=ring.name,
        ring_hash=ring.content_hash,
        mode="cp",
        source_flavor=ring.flavor,
        **front.report_fields(),
        d=subgroup_record(D),
        witness_generators=list(witnesses),
        index_d=D.index,
        max_orbit_over_d=max_orbit_d,
        square_or_bracket_set_size=len(brackets),
        square_or_bracket_span_size=len(span),
        converse_bound=format_rational(bound),
        construction=construction,
        notes=notes,
    )
    return _finish(audit, report, strict)


def derivations(
    ring: FiniteRing,
    B: AdditiveSubgroup,
    witnesses: Sequence[int],
) -> Iterator[Tuple[int, Derivation]]:
    """Every y of B + R b_1 + ... + R b_s with one witness form y = b + sum a_i b_i.

    Elements come out in breadth-first order over the witnesses; each y is
    yielded once, with the least multipliers found at the step it first appears.
    """
    s = len(witnesses)
    known: Dict[int, Derivation] = {}
    for b in B.members:
        known[b] = (b, (0,) * s)
        yield b, known[b]
    for i, w in enumerate(witnesses):
        reps: Dict[int, int] = {}
        for a in ring.elements():
            reps.setdefault(ring.mul(a, w), a)
        fresh: Dict[int, Derivation] = {}
        for y, (b, coeffs) in known.items():
            for v, a in reps.items():
                z = ring.add(y, v)
                if z in known or z in fresh:
                    continue
                vec = list(coeffs)
                vec[i] = a
                fresh[z] = (b, tuple(vec))
        for z, derivation in fresh.items():
            yield z, derivation
        known.update(fresh)


def _find_derivation(ring: FiniteRing, B: AdditiveSubgroup, witnesses: Sequence[int], y: int) -> Optional[Derivation]:
    for z, derivation in derivations(ring, B, witnesses):
        if z == y:
            return derivation
    return None


def extract_zero_ideal(
    ring: FiniteRing,
    epsilon: Optional[Fraction] = None,
    *,
    settings: ExtractionSettings = ExtractionSettings(),
    strict: bool = True,
    log: LogFn = None,
) -> ExtractionReport:
    """Two-sided ideal D of bounded index with |D^2| bounded, for zp(R) >= eps."""
    if ring.flavor != "associative":
        raise FlavorMismatch("extract_zero_ideal", ring.flavor)
    require_within("extract_zero_ideal", ring.cardinality, DEFAULT_CAPS.max_order)
    notes: List[str] = []
    zp = zero_probability(ring)
    eps = _resolve_epsilon(zp, epsilon)
    if eps != zp:
        notes.append(f"epsilon overridden: zp = {format_rational(zp)}")
    audit = AuditLog()
    front = _FrontEnd(ring, "zp", eps, audit, log)
    B = front.B

    if B.order == ring.cardinality:
        D0, witnesses = B, ()
        notes.append("B is the whole ring; D0 = B with no witnesses")
    else:
        D0, witnesses = closure_left_ideal(ring, B)
    audit.check("d0_contains_b", B.member_set <= D0.member_set)
    left = is_ideal(ring, D0, "left")
    audit.check("d0_is_left_ideal", bool(left), left.witness)
    foreign = [w for w in witnesses if w not in D0]
    audit.check("witnesses_in_d0", not foreign, foreign[:1] or None)

    multiples = [left_multiples(ring, w) for w in witnesses]
    rebuilt, _ = span_ids(ring.shape, list(B.spanning_set) + [v for m in multiples for v in m.members])
    audit.check("d0_decomposition", rebuilt == D0.member_set)

    C = right_annihilator(ring, witnesses)
    killed = next(
        (
            (e, w, c)
            for w in witnesses
            for e in ring.basis
            for c in C.spanning_set
            if ring.mul(ring.mul(e, w), c) != 0
        ),
        None,
    )
    audit.check("c_kills_orbits", killed is None, killed)

    sample = deterministic_sample(D0.members, settings.sample_size)
    if settings.bookkeeping:
        table = dict(derivations(ring, B, witnesses))
        found = {y: table.get(y) for y in sample}
    else:
        found = {y: _find_derivation(ring, B, witnesses, y) for y in sample}

    unsound = None
    moved = None
    shrunk = None
    for y in sample:
        derivation = found[y]
        if derivation is None:
            unsound = unsound or {"y": y}
            continue
        b, coeffs = derivation
        total = b
        for a, w in zip(coeffs, witnesses):
            total = ring.add(total, ring.mul(a, w))
        if total != y and unsound is None:
            unsound = {"y": y, "b": b, "coeffs": list(coeffs)}
        if moved is None:
            c = next((c for c in C.spanning_set if ring.mul(y, c) != ring.mul(b, c)), None)
            if c is not None:
                moved = {"y": y, "b": b, "c": c}
        if shrunk is None:
            ann_b = right_annihilator(ring, [b], within=C)
            ann_y = right_annihilator(ring, [y])
            if not ann_b.member_set <= ann_y.member_set:
                shrunk = {"y": y, "b": b}
    audit.check("derivation_sound", unsound is None, unsound)
    audit.check("yc_equals_bc", moved is None, moved)
    audit.check("ann_contains_intersection", shrunk is None, shrunk)

    ann_bound = front.max_orbit_b * C.index
    max_orbit_d0 = max(annihilator_index(ring, y) for y in D0.members)
    audit.check(
        "orbit_bound_over_d0",
        max_orbit_d0 <= ann_bound,
        {"max": max_orbit_d0, "bound": ann_bound},
    )

    D, trace = one_sided_to_two_sided(ring, D0, side="left", sample_size=settings.sample_size, log=log)
    audit.extend(trace.assertion_log, "descent.")
    audit.check("d_contains_b", B.member_set <= D.member_set)
    two_sided = is_ideal(ring, D, "two_sided")
    audit.check("d_is_ideal", bool(two_sided), two_sided.witness)
    audit.check(
        "index_d_bound",
        D.index <= B.index <= floor(front.threshold),
        {"index_d": D.index, "index_b": B.index},
    )
    max_orbit_d = max(annihilator_index(ring, d) for d in D.members)

    construction = bounded_square_construction(ring, within=D, log=log)
    audit.extend(construction.assertion_log, "construction.")
    products = product_set(ring, D, D)
    span, _ = span_ids(ring.shape, products.members)
    audit.check(
        "square_span_bound",
        len(span) <= int(construction.product_bound),
        {"span": len(span), "bound": construction.product_bound},
    )

    bound = Fraction(0)
    try:
        bound = converse_lower_bound(ring, D, "zp")
        audit.check("converse_bound", True, format_rational(bound))
    except ProofAssertionFailed as exc:
        audit.check("converse_bound", False, exc.witness)
    if log:
        log(f"zp: [R:D0]={D0.index} [R:D]={D.index} |span D^2|={len(span)} descent steps={len(trace.steps)}")

    report = ExtractionReport(
        ring_name=ring.name,
        ring_hash=ring.content_hash,
        mode="zp",
        source_flavor=ring.flavor,
        **front.report_fields(),
        d=subgroup_record(D),
        witness_generators=list(witnesses),
        index_d=D.index,
        max_orbit_over_d=max_orbit_d,
        square_or_bracket_set_size=len(products),
        square_or_bracket_span_size=len(span),
        converse_bound=format_rational(bound),
        construction=construction,
        descent=trace,
        notes=notes,
    )
    return _finish(audit, report, strict)


__all__ = ["derivations", "extract_commuting_ideal", "extract_zero_ideal", "x_set"]
