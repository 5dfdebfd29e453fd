"""`ringprob census` command."""

from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import typer
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ..catalog import build_family, census, chunk_count, gustafson_landmark, parse_family, parse_shape
from ..probability import format_rational
from ..storage import write_csv
from .common import EXIT_ASSERTION, cli_errors, config_option, console, err_console, jobs_option, results_dir, run_config
from .enumerate import MANIFEST_COLUMNS


def census_command(
    shapes: List[str] = typer.Argument(..., metavar="SHAPE...", help="One or more shapes, e.g. 4 2,2 2,2,2."),
    family: Optional[List[str]] = typer.Option(
        None, "--family", help="Extra family rings for the landmark check, e.g. triangular:2."
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="CSV path (default: <results>/census.csv)."),
    jobs: Optional[int] = jobs_option(),
    config_path: Path = config_option(),
):
    """
    Census of validated tables with the 5/8 landmark: every ring with cp above 5/8
    must be commutative. Exits 2 when a noncommutative ring exceeds 5/8.
    """
    with cli_errors():
        _, run = run_config("census", config_path, shapes, jobs=jobs)
        parsed = [parse_shape(s) for s in shapes]
        extra = [build_family(parse_family(f)) for f in family or []]
        rows = []
        rings = []
        progress = Progress(
            TextColumn("[bold blue]census"),
            BarColumn(),
            MofNCompleteColumn(),
            console=err_console,
        )
        with progress:
            task_id = progress.add_task("chunks", total=sum(chunk_count(s) for s in parsed))
            for shape in parsed:
                for row in census(
                    shape,
                    jobs=run.jobs,
                    cap=run.caps.enumeration_candidates,
                    progress=lambda n: progress.advance(task_id, n),
                ):
                    rings.append(row.ring)
                    rows.append(
                        [
                            row.candidate_index,
                            row.ring.cardinality,
                            int(row.commutative),
                            format_rational(row.cp),
                            format_rational(row.zp),
                        ]
                    )
        landmark = gustafson_landmark(rings + extra)
        path = out or results_dir() / "census.csv"
        write_csv(path, "census", MANIFEST_COLUMNS, rows)

    best = format_rational(landmark.max_noncommutative_cp) if landmark.max_noncommutative_cp is not None else "-"
    console.print(
        f"{landmark.rings} rings, {landmark.noncommutative} noncommutative; "
        f"max noncommutative cp = {best} ({landmark.attained_by or '-'})"
    )
    console.print(f"[green]Wrote {path}")
    if not landmark.holds:
        err_console.print(f"[red]cp above 5/8 on noncommutative rings: {', '.join(landmark.violators)}")
        raise typer.Exit(code=EXIT_ASSERTION)


__all__ = ["census_command"]
