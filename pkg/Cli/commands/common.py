# Cli/commands/common.py
from __future__ import annotations

import functools
import io
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from Cli.config import SessionConfig
from Cli.parsing import read_polynomials
from Engine.algebra.polynomial import Polynomial
from Engine.magma.terms import Alphabet
from Engine.utils.errors import MagmaForgeError
from Engine.utils.logging_utils import logger


# -----------------------------------------------------------
# Error translation
# -----------------------------------------------------------
def handle_errors(fn: Callable[..., Any]) -> Callable[..., Any]:
    """Map engine errors to exit codes: 2 parse, 3 budget, 4 hypothesis, 5 invariant."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return fn(*args, **kwargs)
        except typer.Exit:
            raise
        except MagmaForgeError as e:
            typer.echo(f"error: {e.detail}", err=True)
            raise typer.Exit(code=e.exit_code)
        except ValidationError as e:
            typer.echo(f"error: invalid configuration: {e.errors()[0]['msg']}", err=True)
            raise typer.Exit(code=2)
        except OSError as e:
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(code=2)
        except Exception as e:
            logger.error(f"Unexpected failure in {fn.__name__}: {str(e)}", exc_info=True)
            typer.echo(f"error: internal failure: {e}", err=True)
            raise typer.Exit(code=5)

    return wrapper


# -----------------------------------------------------------
# Session helpers
# -----------------------------------------------------------
def session(ctx: typer.Context) -> SessionConfig:
    return ctx.obj


def load(path: Path, alphabet: Alphabet) -> List[Polynomial]:
    return read_polynomials(path, alphabet)


def table(title: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> Table:
    out = Table(title=title)
    for column in columns:
        out.add_column(column)
    for row in rows:
        out.add_row(*(str(cell) for cell in row))
    return out


def emit(config: SessionConfig, payload: BaseModel, render: Optional[Callable[[], Table]] = None) -> None:
    """Write JSON, or a rich table in text mode, to the configured output."""
    if config.output_format == "text" and render is not None:
        console = Console(file=io.StringIO(), record=True, width=120)
        console.print(render())
        text = console.export_text()
    else:
        text = payload.model_dump_json(indent=2) + "\n"

    if config.output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(config.output).write_text(text, encoding="utf-8")
