"""`ringprob verify` command."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..neumann.suites import run_suite
from ..schema import VerifyReport
from ..storage import load_ring
from .common import (
    EXIT_ASSERTION,
    cli_errors,
    config_option,
    console,
    emit_model,
    logger,
    max_order_option,
    out_option,
    require_caps,
    run_config,
    verbose_option,
)


def verify_command(
    ring_path: Path = typer.Argument(..., help="Ring JSON file."),
    suite: str = typer.Option(
        "all",
        "--suite",
        help=(
            "commuting-ideal (thm1), zero-ideal (thm3), commutator-construction (prop21), "
            "square-construction (prop31), descent (lemma32), converse, generation (eberhard) or all."
        ),
    ),
    out: Optional[Path] = out_option("Write the full check log as JSON."),
    max_order: Optional[int] = max_order_option(),
    config_path: Path = config_option(),
    verbose: bool = verbose_option(),
):
    """
    Run verification suites and print pass/fail with witnesses for failures.
    """
    with cli_errors():
        _, run = run_config("verify", config_path, [ring_path], max_order=max_order)
        ring = load_ring(ring_path)
        require_caps("verify", ring, run.caps)
        outcomes = run_suite(ring, suite, settings=run.extraction, log=logger(verbose))
        report = VerifyReport(
            ring_name=ring.name,
            ring_hash=ring.content_hash,
            suite=suite,
            passed=all(o.passed for o in outcomes),
            suites=outcomes,
        )
        if out is not None:
            emit_model(report, out)

    table = Table(title=f"verify {ring.label()}")
    table.add_column("Suite")
    table.add_column("Checks", justify="right")
    table.add_column("Result")
    table.add_column("First failure")
    for outcome in outcomes:
        failure = next((c for c in outcome.checks if c.status == "fail"), None)
        detail = "" if failure is None else f"{failure.name} {json.dumps(failure.witness)}"
        status = "[green]pass" if outcome.passed else "[red]fail"
        table.add_row(outcome.suite, str(len(outcome.checks)), status, detail)
    console.print(table)
    if not report.passed:
        raise typer.Exit(code=EXIT_ASSERTION)


__all__ = ["verify_command"]
