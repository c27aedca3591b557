# Engine/kurosh/slices.py
"""
Graded components of the subalgebra generated by homogeneous polynomials,
computed degree by degree: slice(d) is spanned by the degree-d generators
and every product of a slice(a) row with a slice(d - a) row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial, mul, pi_n
from Engine.linalg.echelon import EchelonBasis, echelonize, reduce
from Engine.magma.enumeration import DEFAULT_MONOMIAL_BUDGET
from Engine.utils.errors import (
    AlphabetMismatchError,
    BoundTooSmallError,
    BudgetExceededError,
    HypothesisViolationError,
    InhomogeneousInputError,
    ZeroPolynomialError,
)
from Engine.utils.logging_utils import log_engine_operation
from Engine.utils.parallel import ordered_map


@dataclass(frozen=True)
class GradedSubalgebra:
    generators: Tuple[Polynomial, ...]
    bound: int
    slices: Dict[int, EchelonBasis] = field(default_factory=dict, compare=False, hash=False)

    def slice(self, d: int) -> EchelonBasis:
        return self.slices.get(d, EchelonBasis())

    def dims(self) -> Dict[int, int]:
        return {d: self.slice(d).rank for d in range(1, self.bound + 1)}

    def contains(self, p: Polynomial) -> bool:
        """Membership of p in the subalgebra, for p of degree at most the bound."""
        if p.is_zero():
            return True
        if p.degree > self.bound:
            raise BoundTooSmallError(f"degree {p.degree} lies above the computed bound {self.bound}")
        for d in sorted({code.degree for code in p.monomials()}):
            if not reduce(pi_n(p, d), self.slice(d)).is_zero():
                return False
        return True


def require_homogeneous(G: Sequence[Polynomial], what: str = "generator") -> None:
    alphabet = None
    for g in G:
        if g.is_zero():
            raise ZeroPolynomialError(f"{what}s must be nonzero")
        if not g.is_homogeneous():
            raise InhomogeneousInputError(f"{what} {g} is not homogeneous")
        if alphabet is None:
            alphabet = g.alphabet
        elif g.alphabet != alphabet:
            raise AlphabetMismatchError(f"{what}s live over different alphabets")


def product_candidates(
    slices: Dict[int, EchelonBasis], d: int, budget: int, threads: int
) -> List[Polynomial]:
    """All products u*v with u in slice(a), v in slice(d - a), in a fixed order."""
    pairs = [
        (u, v)
        for a in range(1, d)
        for u in slices.get(a, EchelonBasis()).rows
        for v in slices.get(d - a, EchelonBasis()).rows
    ]
    if len(pairs) > budget:
        raise BudgetExceededError(f"degree-{d} candidate products", len(pairs), budget)
    return ordered_map(lambda pair: mul(pair[0], pair[1]), pairs, threads)


def graded_slices(
    G: Sequence[Polynomial],
    bound: int,
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> GradedSubalgebra:
    G = tuple(G)
    if bound < 1:
        raise HypothesisViolationError(f"bound must be positive, got {bound}")
    require_homogeneous(G)
    for g in G:
        if g.degree > bound:
            raise BoundTooSmallError(f"generator of degree {g.degree} exceeds bound {bound}")

    slices: Dict[int, EchelonBasis] = {}
    for d in range(1, bound + 1):
        candidates = [g for g in G if g.degree == d]
        candidates.extend(product_candidates(slices, d, budget, threads))
        basis = echelonize(candidates)
        if not basis.is_empty():
            slices[d] = basis

    sub = GradedSubalgebra(G, bound, slices)
    log_engine_operation("GRADED_SLICES_COMPLETE", {"generators": len(G), "bound": bound, "dims": sub.dims()})
    return sub
