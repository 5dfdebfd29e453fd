"""`ringprob scan` command."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

import typer
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ..catalog import FamilySpec, build_family, parse_family
from ..errors import CapExceeded
from ..neumann.gaps import gap_row
from ..schema import ExtractionSettings, GapRow
from ..storage import write_csv
from .common import (
    cli_errors,
    config_option,
    console,
    err_console,
    jobs_option,
    max_order_option,
    mode_option,
    objective_option,
    out_option,
    results_dir,
    run_config,
)

SCAN_COLUMNS = [
    "ring",
    "cardinality",
    "mode",
    "cp",
    "zp",
    "valid",
    "index_d",
    "span_d",
    "oracle_index",
    "oracle_span",
    "gap",
    "feasible",
]


def scan_one(args: Tuple[str, str, str, dict, int, int]) -> Optional[GapRow]:
    """Worker: build one family member and compute its gap row; None when over the cap."""
    label, mode, objective, extraction, max_order, oracle_cap = args
    ring = build_family(parse_family(label))
    if ring.cardinality > max_order:
        return None
    return gap_row(ring, mode, objective, ExtractionSettings(**extraction), oracle_cap=oracle_cap)


def row_cells(row: GapRow) -> List[object]:
    return [
        row.ring_name,
        row.cardinality,
        row.mode,
        row.cp,
        row.zp or "",
        int(row.valid),
        row.index_d,
        row.span_d,
        "" if row.oracle_index is None else row.oracle_index,
        "" if row.oracle_span is None else row.oracle_span,
        "" if row.gap is None else row.gap,
        "" if row.feasible is None else int(row.feasible),
    ]


def scan_command(
    families: Optional[List[str]] = typer.Argument(
        None, help="Family specs such as cyclic:6, zero:8, matrix:2, triangular:3, cyclic:2+zero:4."
    ),
    preset: Optional[str] = typer.Option(None, "--preset", help="Named parameter grid from the config's scan section."),
    mode: str = mode_option(),
    objective: Optional[str] = objective_option(),
    out: Optional[Path] = out_option("CSV path (default: <results>/scan-<mode>.csv)."),
    jobs: Optional[int] = jobs_option(),
    max_order: Optional[int] = max_order_option(),
    config_path: Path = config_option(),
):
    """
    Sweep family members and write one gap row per ring as CSV.
    """
    with cli_errors():
        app_cfg, run = run_config(
            "scan", config_path, families, mode=mode, objective=objective, jobs=jobs, max_order=max_order
        )
        labels: List[str] = list(families or [])
        if preset:
            grid = app_cfg.scan_presets.get(preset)
            if grid is None:
                raise ValueError(f"Unknown scan preset {preset!r}; known: {', '.join(sorted(app_cfg.scan_presets))}")
            labels.extend(FamilySpec(grid.family, (p,)).label for p in grid.params)
        if not labels:
            raise ValueError("Nothing to scan: pass family specs or --preset.")
        for label in labels:
            parse_family(label)

        order_cap = min(run.caps.max_order, run.caps.pair_order)
        tasks = [
            (label, run.mode, run.objective, run.extraction.model_dump(), order_cap, run.caps.oracle_order)
            for label in labels
        ]
        rows: List[Optional[GapRow]] = []
        progress = Progress(
            TextColumn("[bold blue]scan"),
            BarColumn(),
            MofNCompleteColumn(),
            console=err_console,
        )
        with progress:
            task_id = progress.add_task("scan", total=len(tasks))
            if run.jobs > 1:
                with ProcessPoolExecutor(max_workers=run.jobs) as pool:
                    for row in pool.map(scan_one, tasks):
                        rows.append(row)
                        progress.advance(task_id)
            else:
                for t in tasks:
                    rows.append(scan_one(t))
                    progress.advance(task_id)

        skipped = [label for label, row in zip(labels, rows) if row is None]
        kept = [row for row in rows if row is not None]
        if not kept and skipped:
            smallest = min(build_family(parse_family(label)).cardinality for label in skipped)
            raise CapExceeded("scan", smallest, order_cap)
        path = out or results_dir() / f"scan-{run.mode}.csv"
        count = write_csv(path, "scan", SCAN_COLUMNS, (row_cells(r) for r in kept))
    console.print(f"[green]Wrote {count} rows to {path}")
    if skipped:
        console.print(f"[yellow]Skipped {len(skipped)} rings over the order cap: {', '.join(skipped)}")


__all__ = ["SCAN_COLUMNS", "row_cells", "scan_command", "scan_one"]
