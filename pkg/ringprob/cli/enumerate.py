"""`ringprob enumerate` command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ..catalog import candidate_count, chunk_count, census_row, enumerate_shape, parse_shape
from ..probability import format_rational
from ..storage import save_ring, write_csv
from .common import cli_errors, config_option, console, err_console, jobs_option, results_dir, run_config

MANIFEST_COLUMNS = ["candidate_index", "cardinality", "commutative", "cp", "zp"]


def enumerate_command(
    shape_text: str = typer.Argument(..., metavar="SHAPE", help="Cyclic orders, e.g. 4, 2,2 or [2,2,2]."),
    out_dir: Optional[Path] = typer.Option(None, "--out", help="Directory for ring files and manifest.csv."),
    jobs: Optional[int] = jobs_option(),
    config_path: Path = config_option(),
):
    """
    Write every validated ring table over SHAPE plus a CSV manifest.

    Counts are of validated tables, not isomorphism classes.
    """
    with cli_errors():
        _, run = run_config("enumerate", config_path, [shape_text], jobs=jobs)
        shape = parse_shape(shape_text)
        label = "x".join(str(d) for d in shape.orders)
        out_dir = out_dir or results_dir() / f"rings-{label}"
        progress = Progress(
            TextColumn("[bold blue]enumerate"),
            BarColumn(),
            MofNCompleteColumn(),
            console=err_console,
        )
        rows = []
        with progress:
            task_id = progress.add_task("chunks", total=chunk_count(shape))
            for c, ring in enumerate_shape(
                shape,
                jobs=run.jobs,
                cap=run.caps.enumeration_candidates,
                progress=lambda n: progress.advance(task_id, n),
            ):
                save_ring(ring, out_dir / f"{label}-{c}.json")
                row = census_row(c, ring)
                rows.append(
                    [c, ring.cardinality, int(row.commutative), format_rational(row.cp), format_rational(row.zp)]
                )
        count = write_csv(out_dir / "manifest.csv", "enumerate", MANIFEST_COLUMNS, rows)
    console.print(
        f"[green]{count} validated tables out of {candidate_count(shape)} candidates written to {out_dir}"
    )


__all__ = ["MANIFEST_COLUMNS", "enumerate_command"]
