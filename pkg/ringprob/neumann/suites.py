"""
Named verification suites, one per proof pipeline, for ``ringprob verify``.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Optional

from ..errors import CapExceeded, ProofAssertionFailed, SymmetryViolated
from ..probability import commuting_probability, zero_probability
from ..ring_core import FiniteRing, associated_lie_ring
from ..schema import AssertionRecord, ExtractionSettings, VerifyOutcome
from ..subobjects import closure, enumerate_subgroups
from .audit import AuditLog
from .constructions import bounded_commutator_construction, bounded_square_construction
from .descent import one_sided_to_two_sided
from .extraction import extract_commuting_ideal, extract_zero_ideal, x_set
from .oracle import converse_lower_bound
from .sumsets import eberhard_generation

LogFn = Optional[Callable[[str], None]]

SUITES = (
    "commuting-ideal",
    "zero-ideal",
    "commutator-construction",
    "square-construction",
    "descent",
    "converse",
    "generation",
)

# Short suite names accepted on the command line.
SUITE_ALIASES = {
    "thm1": "commuting-ideal",
    "thm3": "zero-ideal",
    "prop21": "commutator-construction",
    "prop31": "square-construction",
    "lemma32": "descent",
    "eberhard": "generation",
}


def _associative(ring: FiniteRing) -> bool:
    return ring.flavor == "associative"


def _skipped(audit: AuditLog, suite: str, ring: FiniteRing) -> None:
    audit.check(f"{suite}.skipped", True, detail=f"needs an associative ring, got {ring.flavor}")


def _commuting_ideal(ring, settings, log) -> List[AssertionRecord]:
    return extract_commuting_ideal(ring, settings=settings, strict=False, log=log).assertion_log


def _zero_ideal(ring, settings, log) -> List[AssertionRecord]:
    audit = AuditLog()
    if not _associative(ring):
        _skipped(audit, "zero-ideal", ring)
        return audit.records
    return extract_zero_ideal(ring, settings=settings, strict=False, log=log).assertion_log


def _commutator_construction(ring, settings, log) -> List[AssertionRecord]:
    return bounded_commutator_construction(ring, log=log).assertion_log


def _square_construction(ring, settings, log) -> List[AssertionRecord]:
    audit = AuditLog()
    if not _associative(ring):
        _skipped(audit, "square-construction", ring)
        return audit.records
    return bounded_square_construction(ring, log=log).assertion_log


def _descent(ring, settings, log) -> List[AssertionRecord]:
    """Descent from every one-sided ideal generated by a single basis element."""
    audit = AuditLog()
    if not _associative(ring):
        _skipped(audit, "descent", ring)
        return audit.records
    for side in ("right", "left"):
        for e in ring.basis:
            B = closure(ring, [e], side).ideal
            _, trace = one_sided_to_two_sided(ring, B, side=side, sample_size=settings.sample_size, log=log)
            audit.extend(trace.assertion_log, f"{side}[{e}].")
    return audit.records


def _converse(ring, settings, log) -> List[AssertionRecord]:
    """Converse bound on every ideal when the ring is small, else on the extracted one."""
    audit = AuditLog()
    modes = ["cp", "zp"] if _associative(ring) else ["cp"]
    for mode in modes:
        kind = "lie" if mode == "cp" else "two_sided"
        try:
            ideals = enumerate_subgroups(ring, kind=kind)
        except CapExceeded:
            report = (
                extract_commuting_ideal(ring, settings=settings, strict=False)
                if mode == "cp"
                else extract_zero_ideal(ring, settings=settings, strict=False)
            )
            audit.check(f"{mode}.extracted", report.valid, report.converse_bound)
            continue
        for D in ideals:
            try:
                bound = converse_lower_bound(ring, D, mode)
                audit.check(f"{mode}.converse[{D.index}:{D.order}]", True, bound)
            except ProofAssertionFailed as exc:
                audit.check(f"{mode}.converse[{D.index}:{D.order}]", False, exc.witness)
    return audit.records


def _generation(ring, settings, log) -> List[AssertionRecord]:
    """Generation lemma on the small-orbit sets X of the ring."""
    audit = AuditLog()
    lie = ring if ring.flavor == "lie" else associated_lie_ring(ring)
    sets = {"cp": x_set(lie, commuting_probability(lie), "cp")}
    if _associative(ring):
        sets["zp"] = x_set(ring, zero_probability(ring), "zp")
    for mode, X in sets.items():
        try:
            eb = eberhard_generation(ring, X)
        except SymmetryViolated as exc:
            audit.check(f"{mode}.symmetric", False, exc.witness, str(exc))
            continue
        audit.check(
            f"{mode}.generation",
            eb.verified,
            {"r": eb.r, "length": eb.generation_length, "span": eb.span_order},
        )
    return audit.records


_RUNNERS: Dict[str, Callable[..., List[AssertionRecord]]] = {
    "commuting-ideal": _commuting_ideal,
    "zero-ideal": _zero_ideal,
    "commutator-construction": _commutator_construction,
    "square-construction": _square_construction,
    "descent": _descent,
    "converse": _converse,
    "generation": _generation,
}


def run_suite(
    ring: FiniteRing,
    suite: str,
    settings: ExtractionSettings = ExtractionSettings(),
    log: LogFn = None,
) -> List[VerifyOutcome]:
    """Run one suite (or every suite for ``all``) and return one outcome per suite.

    Aliases resolve to the suite they name; outcomes carry the full name.
    """
    suite = SUITE_ALIASES.get(suite, suite)
    if suite != "all" and suite not in _RUNNERS:
        known = ", ".join(SUITES + tuple(SUITE_ALIASES))
        raise ValueError(f"unknown suite {suite!r}; expected one of {known} or all")
    names = SUITES if suite == "all" else (suite,)
    outcomes = []
    for name in names:
        checks = _RUNNERS[name](ring, settings, log)
        outcomes.append(
            VerifyOutcome(
                suite=name,
                passed=all(c.status == "pass" for c in checks),
                checks=checks,
            )
        )
    return outcomes


__all__ = ["SUITES", "SUITE_ALIASES", "run_suite"]
