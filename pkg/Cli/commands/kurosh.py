# Cli/commands/kurosh.py
from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from Cli.commands.common import emit, handle_errors, load, session, table
from Cli.parsing import format_poly, polynomial_to_schema
from Cli.schemas import FreeGeneratorReportSchema
from Engine.kurosh.generators import FreeGeneratorReport, extract_free_generators
from Engine.kurosh.leading_forms import lift_leading_forms


def report_to_schema(report: FreeGeneratorReport) -> FreeGeneratorReportSchema:
    return FreeGeneratorReportSchema(
        generators=[polynomial_to_schema(g) for g in report.generators],
        generators_text=[format_poly(g) for g in report.generators],
        degrees=list(report.degrees),
        seed_retained=[format_poly(s) for s in report.seed_retained],
        leading_forms=[format_poly(h) for h in report.leading_forms],
        bound=report.bound,
        certificates=dict(sorted(report.certificates.items())),
    )


@handle_errors
def kurosh_command(
    ctx: typer.Context,
    input: Path = typer.Option(..., "--input", exists=True, dir_okay=False, help="Generators of the subalgebra"),
    bound: Optional[int] = typer.Option(None, "--bound", min=1, help="Degree up to which generation is certified"),
    seed: Optional[Path] = typer.Option(None, "--seed", exists=True, dir_okay=False, help="Seed set to retain"),
    inhomogeneous: bool = typer.Option(False, "--inhomogeneous", help="Lift through leading forms"),
) -> None:
    """Extract a free generating set of the subalgebra, certified up to the bound."""
    config = session(ctx)
    G = load(input, config.alphabet)
    seed_set = load(seed, config.alphabet) if seed is not None else []
    top = config.bound if bound is None else bound

    extract = lift_leading_forms if inhomogeneous else extract_free_generators
    report = extract(G, top, seed_set, budget=config.monomial_budget, threads=config.threads)

    payload = report_to_schema(report)
    emit(config, payload, lambda: table(
        f"Free generators (certified up to degree {payload.bound})", ["degree", "generator", "leading form"],
        [[d, g, h] for d, g, h in zip(payload.degrees, payload.generators_text, payload.leading_forms)],
    ))
