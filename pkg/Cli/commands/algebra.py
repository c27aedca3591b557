# Cli/commands/algebra.py
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional

import typer

from Cli.commands.common import emit, handle_errors, load, session, table
from Cli.parsing import format_poly, indeterminate_count, parse_poly, polynomial_to_schema
from Cli.schemas import EvalResultSchema, ProjectionSchema
from Engine.algebra.polynomial import leading_form, pi_n, product_type_split
from Engine.algebra.substitution import SubstitutionMap, substitute
from Engine.magma.terms import Alphabet
from Engine.utils.errors import HypothesisViolationError
from Engine.utils.logging_utils import log_engine_operation


@handle_errors
def eval_command(
    ctx: typer.Context,
    expression: str = typer.Argument(..., help="Polynomial in X1..Xn, e.g. (X1,X2) - 2*X1"),
    images: Path = typer.Option(..., "--images", exists=True, dir_okay=False, help="Images of X1..Xn, one per line"),
) -> None:
    """Substitute polynomials for the indeterminates of an expression."""
    config = session(ctx)
    values = load(images, config.alphabet)
    if not values:
        raise HypothesisViolationError("the images file is empty")
    # uncovered X_k are left for substitute to report
    arity = max(len(values), indeterminate_count(expression))
    P = parse_poly(expression, Alphabet.indeterminates(arity))
    result = substitute(P, SubstitutionMap(tuple(values)))
    log_engine_operation("SUBSTITUTE", {"expression": format_poly(P), "images": len(values), "terms": len(result)})

    payload = EvalResultSchema(
        expression=format_poly(P),
        images=[format_poly(v) for v in values],
        result=polynomial_to_schema(result),
        text=format_poly(result),
        degree=result.degree,
    )
    emit(config, payload, lambda: table(
        "Substitution", ["expression", "result", "degree"],
        [[payload.expression, payload.text, payload.degree]],
    ))


@handle_errors
def project_command(
    ctx: typer.Context,
    polynomial: str = typer.Argument(..., help="Polynomial over the session alphabet"),
    degree: Optional[int] = typer.Option(None, "--degree", min=1, help="Homogeneous component to keep"),
    leading: bool = typer.Option(False, "--leading", help="Project onto the leading form"),
    split: bool = typer.Option(False, "--split", help="Also split the component by product type"),
) -> None:
    """Homogeneous projection pi_n, leading form, and product-type split."""
    config = session(ctx)
    p = parse_poly(polynomial, config.alphabet)
    if leading:
        component = leading_form(p)
        n = component.degree
    elif degree is not None:
        component, n = pi_n(p, degree), degree
    else:
        raise HypothesisViolationError("give --degree or --leading")

    parts: Optional[Dict[str, str]] = None
    if split and n is not None:
        parts = {shape.bits: format_poly(q) for shape, q in product_type_split(p, n).items()}

    payload = ProjectionSchema(
        input=format_poly(p),
        degree=n,
        component=polynomial_to_schema(component),
        text=format_poly(component),
        split=parts,
    )
    rows: List[List[str]] = [["component", payload.text]]
    rows.extend([f"shape {bits}", text] for bits, text in (parts or {}).items())
    emit(config, payload, lambda: table(f"Degree {n} projection", ["part", "value"], rows))
