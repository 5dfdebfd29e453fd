"""Shared utilities for the ringprob CLI.

Holds the console instances, option factories, the exception-to-exit-code
mapping and report emission shared by every command.
"""

from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console

from .. import config as cfg
from ..errors import (
    CapExceeded,
    FlavorMismatch,
    IllFormed,
    NonIdealInput,
    ProofAssertionFailed,
    RingMismatch,
    SymmetryViolated,
    require_within,
)
from ..ring_core import FiniteRing
from ..schema import AppConfig, Caps, RunConfig
from ..settings import load_settings
from ..storage import write_report

console = Console()
# Logs and errors go to stderr so JSON on stdout stays clean.
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_ASSERTION = 2
EXIT_MALFORMED = 3
EXIT_CAP = 4

MALFORMED = (
    IllFormed,
    NonIdealInput,
    RingMismatch,
    SymmetryViolated,
    FlavorMismatch,
    FileNotFoundError,
    ValidationError,
    ValueError,
)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, ProofAssertionFailed):
        return EXIT_ASSERTION
    if isinstance(exc, MALFORMED):
        return EXIT_MALFORMED
    raise exc


@contextmanager
def cli_errors() -> Iterator[None]:
    """Print ringprob failures in red and exit with their mapped code."""
    try:
        yield
    except typer.Exit:
        raise
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        err_console.print(f"[red]{type(exc).__name__}: {exc}")
        raise typer.Exit(code=code) from exc


def mode_option() -> Any:
    return typer.Option("cp", "--mode", help="cp (commuting probability) or zp (zero-product probability).")


def out_option(help_text: str = "Output path (stdout when omitted).") -> Any:
    return typer.Option(None, "--out", help=help_text)


def format_option(default: str = "json") -> Any:
    return typer.Option(default, "--format", help="json, csv or text.")


def max_order_option() -> Any:
    return typer.Option(None, "--max-order", help="Lower the cardinality cap for full enumeration.")


def jobs_option() -> Any:
    return typer.Option(None, "--jobs", help="Parallel workers (default: RINGPROB_JOBS or config).")


def objective_option() -> Any:
    return typer.Option(None, "--objective", help="Oracle objective: max, sum or lex.")


def config_option() -> Any:
    return typer.Option(Path("configs/config.yaml"), "--config", help="Run configuration YAML.")


def verbose_option() -> Any:
    return typer.Option(False, "--verbose", "-v", help="Log pipeline progress to stderr.")


def run_config(
    command: str,
    config_path: Optional[Path],
    inputs: Optional[list] = None,
    **flags: Any,
) -> tuple[AppConfig, RunConfig]:
    app_cfg = cfg.load_app_config(config_path)
    if flags.get("jobs") is None:
        env_jobs = load_settings().jobs
        if env_jobs is not None:
            flags["jobs"] = env_jobs
    return app_cfg, cfg.build_run_config(app_cfg, command, inputs=inputs, **flags)


def require_caps(command: str, ring: FiniteRing, caps: Caps, pairs: bool = True) -> None:
    """Order caps for a loaded ring; ``pairs`` adds the pair-set cap for commands that build D·D or [D, D]."""
    require_within(command, ring.cardinality, caps.max_order)
    if pairs:
        require_within(f"{command} pair sets", ring.cardinality, caps.pair_order)


def logger(verbose: bool) -> Optional[Callable[[str], None]]:
    return err_console.log if verbose else None


def emit_model(model: BaseModel, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(model.model_dump_json(indent=2))
    else:
        write_report(model, out)
        err_console.print(f"[green]Wrote {out}")


def results_dir() -> Path:
    return load_settings().results_dir


__all__ = [
    "EXIT_ASSERTION",
    "EXIT_CAP",
    "EXIT_MALFORMED",
    "EXIT_OK",
    "cli_errors",
    "config_option",
    "console",
    "emit_model",
    "err_console",
    "exit_code_for",
    "format_option",
    "jobs_option",
    "logger",
    "max_order_option",
    "mode_option",
    "objective_option",
    "out_option",
    "require_caps",
    "results_dir",
    "run_config",
    "verbose_option",
]
