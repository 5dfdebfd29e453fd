"""`ringprob info` command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..probability import annihilator_profile, commuting_probability, format_rational, zero_probability
from ..ring_core import FiniteRing, is_commutative
from ..schema import InfoReport
from ..storage import load_ring
from .common import (
    cli_errors,
    config_option,
    console,
    emit_model,
    format_option,
    max_order_option,
    out_option,
    require_caps,
    run_config,
)


def build_info(ring: FiniteRing) -> InfoReport:
    commutative, pair = is_commutative(ring)
    profile = annihilator_profile(ring)
    return InfoReport(
        ring_name=ring.name,
        ring_hash=ring.content_hash,
        flavor=ring.flavor,
        orders=list(ring.orders),
        cardinality=ring.cardinality,
        commutative=commutative,
        noncommuting_pair=list(pair) if pair else None,
        cp=format_rational(commuting_probability(ring)),
        zp=format_rational(zero_probability(ring)) if ring.flavor == "associative" else None,
        max_centralizer_index=profile["max_centralizer_index"],
        max_right_annihilator_index=profile["max_right_annihilator_index"],
        max_left_annihilator_index=profile["max_left_annihilator_index"],
        permutation=list(ring.permutation),
    )


def _decimal(text: Optional[str]) -> str:
    if text is None:
        return "-"
    num, _, den = text.partition("/")
    return f"{int(num) / int(den or 1):.6f}"


def info_command(
    ring_path: Path = typer.Argument(..., help="Ring JSON file."),
    output_format: str = format_option("text"),
    out: Optional[Path] = out_option(),
    max_order: Optional[int] = max_order_option(),
    config_path: Path = config_option(),
):
    """
    Print cp, zp, commutativity and the maximal centralizer/annihilator indices.
    """
    with cli_errors():
        _, run = run_config("info", config_path, [ring_path], output_format=output_format, max_order=max_order)
        ring = load_ring(ring_path)
        require_caps("info", ring, run.caps, pairs=False)
        report = build_info(ring)
        if run.output_format == "json" or out is not None:
            emit_model(report, out)
            return
        table = Table(title=f"{ring.label()} ({ring.flavor}, orders {list(ring.orders)})")
        table.add_column("Quantity")
        table.add_column("Value", justify="right")
        table.add_column("Approx.", justify="right")
        table.add_row("cardinality", str(report.cardinality), "")
        table.add_row("cp", report.cp, _decimal(report.cp))
        table.add_row("zp", report.zp or "-", _decimal(report.zp))
        table.add_row("commutative", "yes" if report.commutative else f"no {report.noncommuting_pair}", "")
        table.add_row("max |[R,x]|", str(report.max_centralizer_index), "")
        table.add_row("max |xR|", str(report.max_right_annihilator_index or "-"), "")
        table.add_row("max |Rx|", str(report.max_left_annihilator_index or "-"), "")
        console.print(table)


__all__ = ["build_info", "info_command"]
