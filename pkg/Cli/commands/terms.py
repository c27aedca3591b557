# Cli/commands/terms.py
from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import typer

from Cli.commands.common import emit, handle_errors, load, session, table
from Cli.parsing import parse_shape, parse_term, parse_word
from Cli.schemas import EmbedResultSchema, EnumerationRowSchema, EnumerationSchema
from Engine.kurosh.slices import graded_slices
from Engine.magma.enumeration import catalan, count_monomials, monomials_of_degree
from Engine.magma.terms import MonomialCode, embed, format_code, format_term, format_word, unembed
from Engine.utils.errors import HypothesisViolationError
from Engine.utils.logging_utils import log_engine_operation


@handle_errors
def embed_command(
    ctx: typer.Context,
    term: Optional[str] = typer.Argument(None, help="Term such as (z2,(z3,(z1,z4)))"),
    shape: Optional[str] = typer.Option(None, "--shape", help="Decode: preorder bitstring"),
    word: Optional[str] = typer.Option(None, "--word", help="Decode: symbols joined by '.'"),
) -> None:
    """Map a magma term to its (shape, word) code, or decode one with --shape/--word."""
    config = session(ctx)
    alpha = config.alphabet
    if term is not None:
        t = parse_term(term, alpha)
        code = embed(t)
    elif shape is not None and word is not None:
        code = MonomialCode(parse_shape(shape), parse_word(word, alpha))
        t = unembed(code)
    else:
        raise HypothesisViolationError("give a term, or both --shape and --word")

    result = EmbedResultSchema(
        term=format_term(t, alpha),
        shape=code.shape.bits,
        word=[alpha.symbol(i) for i in code.word.seq],
        degree=code.degree,
    )
    log_engine_operation("EMBED", {"term": result.term, "shape": result.shape})
    emit(config, result, lambda: table(
        "Embedding", ["term", "shape", "word", "degree"],
        [[result.term, result.shape, format_word(code.word, alpha), result.degree]],
    ))


@handle_errors
def enumerate_command(
    ctx: typer.Context,
    degree: int = typer.Option(..., "--degree", min=1, help="Largest degree to count"),
    listing: bool = typer.Option(False, "--list", help="Also list the monomials of the top degree"),
    generators: Optional[Path] = typer.Option(
        None, "--generators", exists=True, dir_okay=False,
        help="Homogeneous generators; adds slice dimensions of the subalgebra they generate",
    ),
) -> None:
    """Count shapes and monomials by degree."""
    config = session(ctx)
    alpha = config.alphabet
    dims = None
    if generators is not None:
        G = load(generators, alpha)
        dims = graded_slices(G, degree, budget=config.monomial_budget, threads=config.threads).dims()

    rows: List[EnumerationRowSchema] = [
        EnumerationRowSchema(
            degree=d,
            shapes=catalan(d - 1),
            monomials=count_monomials(len(alpha), d),
            slice_dim=None if dims is None else dims[d],
        )
        for d in range(1, degree + 1)
    ]
    shown = None
    if listing:
        shown = [format_code(c, alpha) for c in monomials_of_degree(alpha, degree, config.monomial_budget)]

    result = EnumerationSchema(alphabet=list(alpha.symbols), rows=rows, listing=shown)
    columns = ["degree", "shapes", "monomials"] + (["slice dim"] if dims is not None else [])
    emit(config, result, lambda: table(
        "Enumeration", columns,
        [[r.degree, r.shapes, r.monomials] + ([r.slice_dim] if dims is not None else []) for r in rows],
    ))
