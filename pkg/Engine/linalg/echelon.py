# Engine/linalg/echelon.py
"""
Reduced row echelon bases over Q for vectors inside one homogeneous slice.

Vectors are `Polynomial`s; coordinates are monomial codes. A row's pivot is its
smallest monomial in canonical order, normalized to coefficient 1, and no pivot
appears in any other row.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial
from Engine.magma.terms import Alphabet, MonomialCode
from Engine.utils.errors import AlphabetMismatchError, DegreeMismatchError

Terms = Dict[MonomialCode, Fraction]


@dataclass(frozen=True)
class EchelonBasis:
    rows: Tuple[Polynomial, ...] = ()
    pivots: Tuple[MonomialCode, ...] = ()
    degree: Optional[int] = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def is_empty(self) -> bool:
        return not self.rows

    @property
    def alphabet(self) -> Optional[Alphabet]:
        return self.rows[0].alphabet if self.rows else None

    def contains(self, v: Polynomial) -> bool:
        return reduce(v, self).is_zero()

    @cached_property
    def row_map(self) -> Dict[MonomialCode, Dict[MonomialCode, Fraction]]:
        return {p: dict(r.items()) for p, r in zip(self.pivots, self.rows)}


# -----------------------------------------------------------
# Builder
# -----------------------------------------------------------
def _subtract(work: Terms, c: Fraction, row: Terms) -> None:
    for code, v in row.items():
        nv = work.get(code, Fraction(0)) - c * v
        if nv:
            work[code] = nv
        else:
            work.pop(code, None)


class _Builder:
    """Mutable reduced echelon form; rows keyed by pivot."""

    def __init__(self, basis: Optional[EchelonBasis] = None):
        self.rows: Dict[MonomialCode, Terms] = {}
        self.degree: Optional[int] = None
        self.alphabet: Optional[Alphabet] = None
        if basis is not None and basis.rows:
            for pivot, row in zip(basis.pivots, basis.rows):
                self.rows[pivot] = dict(row.items())
            self.degree = basis.degree
            self.alphabet = basis.alphabet

    def _check(self, v: Polynomial) -> None:
        if v.is_zero():
            return
        if self.alphabet is None:
            self.alphabet = v.alphabet
        elif v.alphabet != self.alphabet:
            raise AlphabetMismatchError("vectors live over different alphabets")
        if not v.is_homogeneous():
            raise DegreeMismatchError(f"vector {v} is not inside one degree slice")
        if self.degree is None:
            self.degree = v.degree
        elif v.degree != self.degree:
            raise DegreeMismatchError(f"degree {v.degree} vector against a degree {self.degree} basis")

    def reduce_terms(self, work: Terms) -> Terms:
        # rows are fully reduced, so the pivots hit are fixed up front
        hits = [code for code in work if code in self.rows]
        for pivot in hits:
            c = work.get(pivot)
            if c:
                _subtract(work, c, self.rows[pivot])
        return work

    def insert(self, work: Terms) -> Terms:
        pivot = min(work, key=MonomialCode.sort_key)
        lead = work[pivot]
        row = {code: v / lead for code, v in work.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                _subtract(other, c, row)
        self.rows[pivot] = row
        return row

    def push(self, v: Polynomial) -> Optional[Terms]:
        """Reduce and insert; returns the new normalized row, or None if v was in the span."""
        self._check(v)
        work = self.reduce_terms(dict(v.items()))
        if not work:
            return None
        return dict(self.insert(work))

    def freeze(self) -> EchelonBasis:
        pivots = sorted(self.rows, key=MonomialCode.sort_key)
        rows = tuple(Polynomial(self.alphabet, self.rows[p]) for p in pivots)
        return EchelonBasis(rows=rows, pivots=tuple(pivots), degree=self.degree if rows else None)


# -----------------------------------------------------------
# Operations
# -----------------------------------------------------------
def echelonize(vs: Sequence[Polynomial]) -> EchelonBasis:
    builder = _Builder()
    for v in vs:
        builder.push(v)
    return builder.freeze()


def reduce(v: Polynomial, b: EchelonBasis) -> Polynomial:
    if v.is_zero() or b.is_empty():
        return v
    if not v.is_homogeneous() or v.degree != b.degree:
        raise DegreeMismatchError(f"cannot reduce a vector of degree {v.degree} against a degree {b.degree} basis")
    if v.alphabet != b.alphabet:
        raise AlphabetMismatchError("vector and basis live over different alphabets")
    rows = b.row_map
    work: Terms = dict(v.items())
    for pivot in [code for code in work if code in rows]:
        c = work.get(pivot)
        if c:
            _subtract(work, c, rows[pivot])
    return Polynomial(v.alphabet, work)


def extend_basis(
    core: EchelonBasis, candidates: Sequence[Polynomial]
) -> Tuple[EchelonBasis, List[Polynomial]]:
    """
    Grow `core` by the candidates, in input order. `added` holds the normalized
    reductions of the candidates that were not yet in the span.
    """
    builder = _Builder(core)
    added: List[Polynomial] = []
    for v in candidates:
        row = builder.push(v)
        if row is not None:
            added.append(Polynomial(builder.alphabet, row))
    return builder.freeze(), added
