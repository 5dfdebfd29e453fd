"""Typer application wiring for the ringprob CLI."""
from __future__ import annotations

import typer

from .census import census_command
from .enumerate import enumerate_command
from .extract import extract_command
from .info import info_command
from .init import init_command
from .oracle import oracle_command
from .scan import scan_command
from .verify import verify_command

app = typer.Typer(help="Exact commuting / zero-product probabilities and audited ideal extraction for finite rings.")

app.command("info")(info_command)
app.command("extract")(extract_command)
app.command("verify")(verify_command)
app.command("scan")(scan_command)
app.command("enumerate")(enumerate_command)
app.command("oracle")(oracle_command)
app.command("census")(census_command)
app.command("init")(init_command)


def main():
    app(prog_name="ringprob")


if __name__ == "__main__":
    main()
