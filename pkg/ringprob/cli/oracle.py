"""`ringprob oracle` command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from ..errors import require_within
from ..neumann.gaps import gap_row
from ..neumann.oracle import brute_force_optimal_ideal
from ..ring_core import associated_lie_ring
from ..schema import OracleResult
from ..storage import load_ring
from .common import (
    cli_errors,
    config_option,
    console,
    emit_model,
    logger,
    mode_option,
    objective_option,
    out_option,
    require_caps,
    run_config,
    verbose_option,
)


def oracle_command(
    ring_path: Path = typer.Argument(..., help="Ring JSON file."),
    mode: str = mode_option(),
    objective: Optional[str] = objective_option(),
    out: Optional[Path] = out_option("Write the optimal ideal as JSON."),
    config_path: Path = config_option(),
    verbose: bool = verbose_option(),
):
    """
    Find the optimal ideal by brute force and compare it with the extracted one.
    """
    with cli_errors():
        _, run = run_config("oracle", config_path, [ring_path], mode=mode, objective=objective)
        ring = load_ring(ring_path)
        require_within("oracle", ring.cardinality, run.caps.oracle_order)
        require_caps("oracle", ring, run.caps)
        target = ring if run.mode == "zp" or ring.flavor == "lie" else associated_lie_ring(ring)
        best = brute_force_optimal_ideal(target, mode=run.mode, objective=run.objective, cap=run.caps.oracle_order)
        result = OracleResult(
            ring_name=ring.name,
            ring_hash=ring.content_hash,
            mode=run.mode,
            objective=run.objective,
            members=list(best.ideal.members),
            index=best.index,
            span_size=best.span_size,
            value=list(best.value),
            candidates=best.candidates,
        )
        row = gap_row(
            ring, run.mode, run.objective, run.extraction, oracle_cap=run.caps.oracle_order, log=logger(verbose)
        )
        if out is not None:
            emit_model(result, out)

    table = Table(title=f"oracle {ring.label()} ({run.mode}, objective {run.objective})")
    table.add_column("Ideal")
    table.add_column("Index", justify="right")
    table.add_column("Span", justify="right")
    table.add_column("Objective", justify="right")
    table.add_row("optimal", str(best.index), str(best.span_size), str(list(best.value)))
    table.add_row("extracted", str(row.index_d), str(row.span_d), str(row.extracted_value))
    console.print(table)
    console.print(
        f"D* = {list(best.ideal.members)}  ({best.candidates} candidate ideals)  "
        f"gap = {row.gap}  feasible = {row.feasible}"
    )


__all__ = ["oracle_command"]
