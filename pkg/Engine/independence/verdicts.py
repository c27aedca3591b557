# Engine/independence/verdicts.py
"""
Algebraic independence of finite polynomial sets, certified up to a degree
bound by exhaustive kernel search, or unconditionally through the linear-rank
and leading-form criteria.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial, leading_form, mul
from Engine.algebra.substitution import SubstitutionMap, substitute
from Engine.linalg.relations import Combination, first_relation
from Engine.magma.enumeration import DEFAULT_MONOMIAL_BUDGET
from Engine.magma.terms import Alphabet, MonomialCode, graft, leaf_code
from Engine.utils.errors import (
    AlphabetMismatchError,
    BoundTooSmallError,
    BudgetExceededError,
    DegreeMismatchError,
    DuplicateInputError,
    HypothesisViolationError,
    InhomogeneousInputError,
    InvariantFailure,
    ZeroPolynomialError,
)
from Engine.utils.logging_utils import log_engine_operation
from Engine.utils.parallel import ordered_map


class VerdictStatus(str, Enum):
    INDEPENDENT_UP_TO = "independent_up_to"
    DEPENDENT = "dependent"
    REDUCED_CERTIFIED = "reduced_certified"


class Certificate(str, Enum):
    LINEAR_RANK = "linear_rank"
    LEADING_FORMS = "leading_forms"
    KERNEL_SEARCH = "kernel_search"


@dataclass(frozen=True)
class IndependenceVerdict:
    status: VerdictStatus
    certificate: Certificate
    bound: Optional[int] = None
    witness: Optional[Polynomial] = None

    @property
    def independent(self) -> bool:
        return self.status is not VerdictStatus.DEPENDENT


Expression = Tuple[MonomialCode, Polynomial]


# -----------------------------------------------------------
# Helpers
# -----------------------------------------------------------
def _validate_inputs(ps: Sequence[Polynomial]) -> None:
    if not ps:
        raise HypothesisViolationError("need at least one polynomial")
    alphabet = ps[0].alphabet
    for p in ps:
        if p.is_zero():
            raise ZeroPolynomialError("inputs must be nonzero")
        if p.alphabet != alphabet:
            raise AlphabetMismatchError("inputs live over different alphabets")


def check_relation(P: Polynomial, ps: Sequence[Polynomial]) -> bool:
    """True when P is a nonzero relation: P(ps) = 0."""
    return not P.is_zero() and substitute(P, SubstitutionMap(tuple(ps))).is_zero()


def _dependent(P: Polynomial, ps: Sequence[Polynomial], certificate: Certificate,
               bound: Optional[int]) -> IndependenceVerdict:
    if not check_relation(P, ps):
        log_engine_operation("WITNESS_REJECTED", {"witness": str(P)}, success=False)
        raise InvariantFailure(f"witness {P} does not vanish on the inputs")
    log_engine_operation("RELATION_FOUND", {"witness": str(P), "inputs": len(ps)})
    return IndependenceVerdict(VerdictStatus.DEPENDENT, certificate, bound, P)


def _witness(n: int, codes: Sequence[MonomialCode], relation: Combination) -> Polynomial:
    return Polynomial(Alphabet.indeterminates(n), {codes[i]: c for i, c in relation.items()})


def _highest_key(P: Polynomial) -> tuple:
    return P.monomials()[-1].sort_key()


def monomial_counts(degrees: Sequence[int], dmax: int) -> Dict[int, int]:
    """
    Number of indeterminate monomials whose substituted degree is w, for
    w <= dmax, when X_i stands for a polynomial of degree degrees[i].
    """
    counts: Dict[int, int] = {}
    for w in range(1, dmax + 1):
        counts[w] = sum(1 for d in degrees if d == w) + sum(
            counts[a] * counts[w - a] for a in range(1, w)
        )
    return counts


def _enumerate_expressions(
    ps: Sequence[Polynomial], dmax: int, budget: int, threads: int
) -> Dict[int, List[Expression]]:
    degrees = [p.degree for p in ps]
    counts = monomial_counts(degrees, dmax)
    for w, size in counts.items():
        if size > budget:
            raise BudgetExceededError(f"weight-{w} expression slice", size, budget)

    table: Dict[int, List[Expression]] = {}
    for w in range(1, dmax + 1):
        entries: List[Expression] = [(leaf_code(i), p) for i, p in enumerate(ps) if degrees[i] == w]
        pairs = [
            (left, right)
            for a in range(1, w)
            for left in table[a]
            for right in table[w - a]
        ]
        products = ordered_map(lambda pair: mul(pair[0][1], pair[1][1]), pairs, threads)
        entries.extend(
            (graft(left[0], right[0]), value) for (left, right), value in zip(pairs, products)
        )
        table[w] = entries
    return table


def _slice_relation(n: int, entries: List[Expression]) -> Optional[Polynomial]:
    if not entries:
        return None
    ordered = sorted(entries, key=lambda e: e[0].sort_key())
    found = first_relation(ordered[0][1].alphabet, [value for _, value in ordered])
    if found is None:
        return None
    _, relation = found
    return _witness(n, [code for code, _ in ordered], relation)


# -----------------------------------------------------------
# Operations
# -----------------------------------------------------------
def relation_search(
    ps: Sequence[Polynomial],
    dmax: int,
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> IndependenceVerdict:
    ps = list(ps)
    _validate_inputs(ps)
    if len(set(ps)) != len(ps):
        raise DuplicateInputError("inputs must be pairwise distinct")
    top = max(p.degree for p in ps)
    if dmax < top:
        raise BoundTooSmallError(f"dmax={dmax} is below the largest input degree {top}")

    n = len(ps)
    table = _enumerate_expressions(ps, dmax, budget, threads)

    if all(p.is_homogeneous() for p in ps):
        # substituted degree equals weight, so each weight is one output slice
        witnesses = ordered_map(lambda w: _slice_relation(n, table[w]), sorted(table), threads)
        found = [w for w in witnesses if w is not None]
        witness = min(found, key=_highest_key) if found else None
    else:
        # inhomogeneous inputs: graded pieces of a relation need not vanish separately
        joint = [entry for w in sorted(table) for entry in table[w]]
        witness = _slice_relation(n, joint)

    if witness is not None:
        return _dependent(witness, ps, Certificate.KERNEL_SEARCH, dmax)

    log_engine_operation(
        "RELATION_SEARCH_COMPLETE",
        {"inputs": n, "dmax": dmax, "expressions": sum(len(v) for v in table.values())},
    )
    return IndependenceVerdict(VerdictStatus.INDEPENDENT_UP_TO, Certificate.KERNEL_SEARCH, dmax)


def same_degree_fast_path(hs: Sequence[Polynomial]) -> IndependenceVerdict:
    """Linearly independent homogeneous polynomials of one degree are algebraically independent."""
    hs = list(hs)
    _validate_inputs(hs)
    for h in hs:
        if not h.is_homogeneous():
            raise InhomogeneousInputError(f"{h} is not homogeneous")
    degrees = sorted({h.degree for h in hs})
    if len(degrees) != 1:
        raise DegreeMismatchError(f"inputs must share one degree, got {degrees}")

    found = first_relation(hs[0].alphabet, hs)
    if found is not None:
        _, relation = found
        codes = [leaf_code(i) for i in range(len(hs))]
        return _dependent(_witness(len(hs), codes, relation), hs, Certificate.LINEAR_RANK, None)
    return IndependenceVerdict(VerdictStatus.REDUCED_CERTIFIED, Certificate.LINEAR_RANK)


def leading_forms_independent(
    ps: Sequence[Polynomial], dmax: int, *, budget: int = DEFAULT_MONOMIAL_BUDGET, threads: int = 1
) -> Tuple[bool, Optional[int]]:
    """
    Whether ps is reduced: pairwise distinct leading forms that are
    algebraically independent. The second value is the bound the check relied
    on (None when the rank criterion alone sufficed).
    """
    forms = [leading_form(p) for p in ps]
    if len(set(forms)) != len(forms):
        return False, None
    classes: Dict[int, List[Polynomial]] = {}
    for f in forms:
        classes.setdefault(f.degree, []).append(f)
    for members in classes.values():
        if not same_degree_fast_path(members).independent:
            return False, None
    if len(classes) == 1:
        return True, None
    verdict = relation_search(forms, dmax, budget=budget, threads=threads)
    return verdict.independent, dmax


def is_reduced(
    ps: Sequence[Polynomial],
    dmax: int,
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> IndependenceVerdict:
    ps = list(ps)
    _validate_inputs(ps)
    reduced, used_bound = leading_forms_independent(ps, dmax, budget=budget, threads=threads)
    if reduced:
        log_engine_operation("REDUCED_SET_CERTIFIED", {"inputs": len(ps), "bound": used_bound})
        return IndependenceVerdict(VerdictStatus.REDUCED_CERTIFIED, Certificate.LEADING_FORMS, used_bound)
    log_engine_operation("REDUCED_TEST_INCONCLUSIVE", {"inputs": len(ps), "fallback_dmax": dmax})
    return relation_search(ps, dmax, budget=budget, threads=threads)


def certify(
    ps: Sequence[Polynomial],
    dmax: int,
    mode: str = "auto",
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> IndependenceVerdict:
    """Dispatch for the `indep` command: auto | exhaustive | reduced."""
    if mode == "exhaustive":
        return relation_search(ps, dmax, budget=budget, threads=threads)
    if mode == "reduced":
        return is_reduced(ps, dmax, budget=budget, threads=threads)
    if mode != "auto":
        raise HypothesisViolationError(f"unknown mode {mode!r}")
    ps = list(ps)
    _validate_inputs(ps)
    if all(p.is_homogeneous() for p in ps) and len({p.degree for p in ps}) == 1:
        return same_degree_fast_path(ps)
    return is_reduced(ps, dmax, budget=budget, threads=threads)
