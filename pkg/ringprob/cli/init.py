"""`ringprob init` command."""

from __future__ import annotations

from pathlib import Path

import typer

from .. import config as cfg
from .common import console, results_dir


def init_command(
    force: bool = typer.Option(
        False, "--force", "-f", help="Overwrite an existing config template."
    ),
):
    """
    Create the default config template and the results folder.
    """
    root = Path(".").resolve()
    path = root / cfg.DEFAULT_CONFIG_PATH
    if path.exists() and not force:
        console.print(f"[yellow]{path} exists; use --force to overwrite")
    else:
        cfg.write_default_config(path)
    out = results_dir()
    out = out if out.is_absolute() else root / out
    out.mkdir(parents=True, exist_ok=True)
    console.print(f"[green]Initialized configs/ and {out.name}/ under {root}")


__all__ = ["init_command"]
