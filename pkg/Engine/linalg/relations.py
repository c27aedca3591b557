# Engine/linalg/relations.py
"""
Triangular elimination with cofactor tracking.

Every stored row remembers which combination of the pushed vectors produced
it, so a vector that reduces to zero yields an explicit linear relation.
Unlike `echelon`, vectors may mix degrees, and the pivot order is pluggable:
canonical (smallest monomial first) or degree-descending (pivot inside the
highest-degree component, used for leading-form work).
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial
from Engine.magma.terms import Alphabet, MonomialCode

Terms = Dict[MonomialCode, Fraction]
Combination = Dict[int, Fraction]
PivotKey = Callable[[MonomialCode], tuple]


def canonical_key(code: MonomialCode) -> tuple:
    return code.sort_key()


def degree_descending_key(code: MonomialCode) -> tuple:
    return (-code.degree, code.shape.bits, code.word.seq)


def _axpy(target: Dict, c: Fraction, source: Dict) -> None:
    for k, v in source.items():
        nv = target.get(k, Fraction(0)) - c * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class RelationTracker:
    def __init__(self, alphabet: Alphabet, key: PivotKey = canonical_key):
        self.alphabet = alphabet
        self.key = key
        self._rows: Dict[MonomialCode, Tuple[Terms, Combination]] = {}
        self._count = 0

    def __len__(self) -> int:
        return self._count

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, work: Terms, combo: Combination) -> None:
        heap = [(self.key(code), code) for code in work if code in self._rows]
        heapq.heapify(heap)
        while heap:
            _, pivot = heapq.heappop(heap)
            c = work.get(pivot)
            if not c:
                continue
            row, row_combo = self._rows[pivot]
            for code in row:
                if code not in work and code in self._rows:
                    heapq.heappush(heap, (self.key(code), code))
            _axpy(work, c, row)
            _axpy(combo, c, row_combo)

    def _push(self, v: Polynomial) -> Tuple[Optional[MonomialCode], Combination]:
        index = self._count
        self._count += 1
        work: Terms = dict(v.items())
        combo: Combination = {index: Fraction(1)}
        self._reduce(work, combo)
        if not work:
            return None, combo
        pivot = min(work, key=self.key)
        lead = work[pivot]
        self._rows[pivot] = (
            {code: c / lead for code, c in work.items()},
            {i: c / lead for i, c in combo.items()},
        )
        return pivot, combo

    def push(self, v: Polynomial) -> Optional[Combination]:
        """
        Add the next vector (index = number of vectors pushed so far).
        Returns the relation sum(c_i v_i) = 0 if v is dependent, with
        coefficient 1 on v itself; otherwise None.
        """
        pivot, combo = self._push(v)
        return combo if pivot is None else None

    def insert(self, v: Polynomial) -> Optional[Polynomial]:
        """Like push, but returns the newly stored row (None when v was dependent)."""
        pivot, _ = self._push(v)
        if pivot is None:
            return None
        return Polynomial(self.alphabet, self._rows[pivot][0])

    def express(self, target: Polynomial) -> Optional[Combination]:
        """Coefficients writing `target` in terms of the pushed vectors, or None."""
        work: Terms = dict(target.items())
        combo: Combination = {}
        self._reduce(work, combo)
        if work:
            return None
        return {i: -c for i, c in sorted(combo.items())}

    def rows(self) -> List[Tuple[Polynomial, Combination]]:
        """Stored rows in pivot order, with the combination each one stands for."""
        out = []
        for pivot in sorted(self._rows, key=self.key):
            terms, combo = self._rows[pivot]
            out.append((Polynomial(self.alphabet, terms), dict(combo)))
        return out


def first_relation(
    alphabet: Alphabet, vectors: Sequence[Polynomial], key: PivotKey = canonical_key
) -> Optional[Tuple[int, Combination]]:
    """The first index whose vector depends on its predecessors, with the relation."""
    tracker = RelationTracker(alphabet, key)
    for i, v in enumerate(vectors):
        relation = tracker.push(v)
        if relation is not None:
            return i, relation
    return None


def express_in_span(
    alphabet: Alphabet, vectors: Sequence[Polynomial], target: Polynomial
) -> Optional[Combination]:
    tracker = RelationTracker(alphabet)
    for v in vectors:
        tracker.push(v)
    return tracker.express(target)
