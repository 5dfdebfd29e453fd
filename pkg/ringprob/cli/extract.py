"""`ringprob extract` command."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional

import typer

from ..neumann import extract_commuting_ideal, extract_zero_ideal
from ..storage import load_ring
from .common import (
    EXIT_ASSERTION,
    cli_errors,
    config_option,
    emit_model,
    err_console,
    logger,
    max_order_option,
    mode_option,
    out_option,
    require_caps,
    run_config,
    verbose_option,
)


def extract_command(
    ring_path: Path = typer.Argument(..., help="Ring JSON file."),
    mode: str = mode_option(),
    out: Optional[Path] = out_option("Report path (stdout when omitted)."),
    epsilon: Optional[str] = typer.Option(
        None, "--epsilon", help="Override eps with a rational such as 1/2 (default: the ring's own cp or zp)."
    ),
    max_order: Optional[int] = max_order_option(),
    config_path: Path = config_option(),
    verbose: bool = verbose_option(),
):
    """
    Run the ideal-extraction pipeline and write its audited report.

    Exits 2 when any proof-step assertion fails; the report is written regardless.
    """
    with cli_errors():
        _, run = run_config("extract", config_path, [ring_path], mode=mode, max_order=max_order)
        ring = load_ring(ring_path)
        require_caps("extract", ring, run.caps)
        eps = Fraction(epsilon) if epsilon is not None else None
        extract = extract_commuting_ideal if run.mode == "cp" else extract_zero_ideal
        report = extract(ring, eps, settings=run.extraction, strict=False, log=logger(verbose))
        emit_model(report, out)
    if not report.valid:
        failed = [r.name for r in report.assertion_log if r.status == "fail"]
        err_console.print(f"[red]INVALID: failed assertions {failed}")
        raise typer.Exit(code=EXIT_ASSERTION)


__all__ = ["extract_command"]
