# Cli/commands/oracle.py
from __future__ import annotations

from typing import Optional

import typer

from Cli.commands.common import emit, handle_errors, session, table
from Cli.oracle import oracle_suite


@handle_errors
def oracle_command(
    ctx: typer.Context,
    samples: int = typer.Option(20, "--samples", min=1, help="Size of each randomized family"),
    seed: Optional[int] = typer.Option(None, "--seed", help="RNG seed (defaults to MAGMA_FORGE_SEED)"),
) -> None:
    """Run the brute-force verification suite; exits 5 if any property fails."""
    config = session(ctx)
    report = oracle_suite(config, config.seed if seed is None else seed, samples)
    emit(config, report, lambda: table(
        f"Oracle suite (seed {report.seed})", ["property", "result", "checked", "counterexample"],
        [[p.name, "pass" if p.passed else "FAIL", p.checked, p.counterexample or "-"] for p in report.properties],
    ))
    if not report.passed:
        raise typer.Exit(code=5)
