from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from Cli.commands import algebra, independence, kurosh, oracle, terms
from Cli.commands.common import handle_errors
from Cli.config import SessionConfig, get_settings
from Engine.utils.logging_utils import configure_logging


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


app = typer.Typer(
    name="magma-forge",
    help="Free magmas and free non-associative algebras over Q.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
@handle_errors
def main(
    ctx: typer.Context,
    alphabet: Optional[str] = typer.Option(None, "--alphabet", help="Comma separated symbols (MAGMA_FORGE_ALPHABET)"),
    budget: Optional[int] = typer.Option(None, "--budget", min=1, help="Monomial budget per slice (MAGMA_FORGE_BUDGET)"),
    bound: Optional[int] = typer.Option(None, "--bound", min=1, help="Default degree bound (MAGMA_FORGE_BOUND)"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="Worker threads; output never depends on it"),
    output_format: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json | text"),
    output: Optional[Path] = typer.Option(None, "--output", help="Write the result here instead of stdout"),
) -> None:
    settings = get_settings()
    configure_logging(settings.LOG_LEVEL, settings.LOG_FILE)
    ctx.obj = SessionConfig.from_settings(
        settings,
        alphabet=alphabet,
        budget=budget,
        bound=bound,
        threads=threads,
        output=output,
        output_format=output_format.value,
    )


app.command("embed")(terms.embed_command)
app.command("enumerate")(terms.enumerate_command)
app.command("eval")(algebra.eval_command)
app.command("project")(algebra.project_command)
app.command("indep")(independence.indep_command)
app.command("kurosh")(kurosh.kurosh_command)
app.command("oracle")(oracle.oracle_command)


if __name__ == "__main__":
    app()
