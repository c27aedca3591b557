# Cli/commands/independence.py
from __future__ import annotations

from enum import Enum
from pathlib import Path

import typer

from Cli.commands.common import emit, handle_errors, load, session, table
from Cli.parsing import format_poly, polynomial_to_schema
from Cli.schemas import VerdictSchema
from Engine.independence.verdicts import IndependenceVerdict, certify
from Engine.utils.logging_utils import log_engine_operation


class Mode(str, Enum):
    auto = "auto"
    exhaustive = "exhaustive"
    reduced = "reduced"


def verdict_to_schema(verdict: IndependenceVerdict) -> VerdictSchema:
    return VerdictSchema(
        status=verdict.status.value,
        bound=verdict.bound,
        certificate=verdict.certificate.value,
        witness=None if verdict.witness is None else polynomial_to_schema(verdict.witness),
        witness_text=None if verdict.witness is None else format_poly(verdict.witness),
    )


@handle_errors
def indep_command(
    ctx: typer.Context,
    input: Path = typer.Option(..., "--input", exists=True, dir_okay=False, help="Polynomials to test"),
    dmax: int = typer.Option(..., "--dmax", min=1, help="Degree bound for kernel searches"),
    mode: Mode = typer.Option(Mode.auto, "--mode", help="auto | exhaustive | reduced"),
) -> None:
    """Decide algebraic independence up to a degree bound."""
    config = session(ctx)
    ps = load(input, config.alphabet)
    verdict = certify(ps, dmax, mode.value, budget=config.monomial_budget, threads=config.threads)
    log_engine_operation("INDEPENDENCE_VERDICT", {"status": verdict.status.value, "mode": mode.value, "dmax": dmax})

    payload = verdict_to_schema(verdict)
    emit(config, payload, lambda: table(
        "Independence", ["status", "bound", "certificate", "witness"],
        [[payload.status, payload.bound if payload.bound is not None else "-",
          payload.certificate, payload.witness_text or "-"]],
    ))
