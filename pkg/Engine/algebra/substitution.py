# Engine/algebra/substitution.py
"""
Substitution homomorphisms X_i -> images[i] from expressions in indeterminates
into the target algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial, linear_combination, mul
from Engine.magma.terms import Alphabet, MonomialCode, Shape, Word, ungraft
from Engine.utils.errors import AlphabetMismatchError, ArityError, UncoveredIndeterminateError

if TYPE_CHECKING:
    from Engine.linalg.echelon import EchelonBasis


@dataclass(frozen=True)
class SubstitutionMap:
    images: Tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ArityError("a substitution needs at least one image")
        target = images[0].alphabet
        for p in images[1:]:
            if p.alphabet != target:
                raise AlphabetMismatchError("substitution images live over different alphabets")

    @property
    def target(self) -> Alphabet:
        return self.images[0].alphabet

    def __len__(self) -> int:
        return len(self.images)


class MonomialEvaluator:
    """
    Evaluates indeterminate monomials under a fixed substitution, bottom-up,
    memoizing every distinct sub-monomial.
    """

    def __init__(self, smap: SubstitutionMap):
        self.smap = smap
        self._memo: Dict[MonomialCode, Polynomial] = {}

    def evaluate(self, code: MonomialCode) -> Polynomial:
        cached = self._memo.get(code)
        if cached is not None:
            return cached
        if code.degree == 1:
            index = code.word.seq[0]
            if index >= len(self.smap.images):
                raise UncoveredIndeterminateError(
                    f"X{index + 1} has no image ({len(self.smap.images)} images given)"
                )
            value = self.smap.images[index]
        else:
            left, right = ungraft(code)
            value = mul(self.evaluate(left), self.evaluate(right))
        self._memo[code] = value
        return value


def substitute(P: Polynomial, s: SubstitutionMap) -> Polynomial:
    evaluator = MonomialEvaluator(s)
    return linear_combination(s.target, ((c, evaluator.evaluate(code)) for code, c in P.items()))


def shape_class_evaluations(shape: Shape, ps: Sequence[Polynomial]) -> List[Polynomial]:
    """
    Evaluate every monomial M' with product type `shape` in len(ps)
    indeterminates at ps, in canonical order of M'.
    """
    evaluator = MonomialEvaluator(SubstitutionMap(tuple(ps)))
    return [
        evaluator.evaluate(MonomialCode(shape, Word(seq)))
        for seq in product(range(len(ps)), repeat=shape.degree)
    ]


# -----------------------------------------------------------
# Subalgebra membership (graded slices live in Engine.kurosh)
# -----------------------------------------------------------
def subalgebra_membership_slice(G: Sequence[Polynomial], d: int) -> "EchelonBasis":
    """Reduced basis of the degree-d component of the subalgebra generated by G."""
    from Engine.kurosh.slices import graded_slices, require_homogeneous

    require_homogeneous(G)
    return graded_slices([g for g in G if g.degree <= d], d).slice(d)


def in_subalgebra(G: Sequence[Polynomial], p: Polynomial, bound: Optional[int] = None) -> bool:
    """
    Whether p lies in the subalgebra generated by the homogeneous set G.
    Slices are computed up to `bound`, which defaults to deg(p).
    """
    from Engine.kurosh.slices import graded_slices, require_homogeneous

    require_homogeneous(G)
    if p.is_zero():
        return True
    top = p.degree if bound is None else bound
    return graded_slices([g for g in G if g.degree <= top], top).contains(p)
