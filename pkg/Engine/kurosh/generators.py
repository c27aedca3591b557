# Engine/kurosh/generators.py
"""
Free generating sets for homogeneous subalgebras.

Degree by degree, the slice W_k of the target subalgebra is compared with the
degree-k slice B_k of the subalgebra generated by the generators chosen so
far; a reduced complement of B_k inside W_k becomes the new degree-k
generators. Every report is certified up to its bound only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial
from Engine.independence.verdicts import is_reduced, relation_search
from Engine.linalg.echelon import EchelonBasis, echelonize, extend_basis, reduce
from Engine.magma.enumeration import DEFAULT_MONOMIAL_BUDGET
from Engine.utils.errors import BoundTooSmallError, HypothesisViolationError, InvariantFailure
from Engine.utils.logging_utils import log_engine_operation
from Engine.kurosh.slices import GradedSubalgebra, graded_slices, product_candidates, require_homogeneous


@dataclass(frozen=True)
class FreeGeneratorReport:
    generators: Tuple[Polynomial, ...]
    degrees: Tuple[int, ...]
    seed_retained: Tuple[Polynomial, ...]
    bound: int
    certificates: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)
    # homogeneous generators the set was built from (differs from `generators` only for lifts)
    leading_forms: Tuple[Polynomial, ...] = ()


# -----------------------------------------------------------
# Extension step
# -----------------------------------------------------------
def independent_modulo(core: EchelonBasis, vs: Sequence[Polynomial]) -> bool:
    """True when vs is linearly independent modulo span(core)."""
    _, added = extend_basis(core, vs)
    return len(added) == len(vs)


def extension_step_holds(
    prior: Sequence[Polynomial], new: Sequence[Polynomial], bound: int
) -> bool:
    """
    Whether the homogeneous set `new` meets the subalgebra generated by
    `prior` only in 0 and is linearly independent, checked slice by slice up
    to `bound`.
    """
    require_homogeneous(list(prior) + list(new))
    sub = graded_slices([p for p in prior if p.degree <= bound], bound)
    by_degree: Dict[int, List[Polynomial]] = {}
    for h in new:
        if h.degree > bound:
            raise BoundTooSmallError(f"element of degree {h.degree} exceeds bound {bound}")
        by_degree.setdefault(h.degree, []).append(h)
    return all(independent_modulo(sub.slice(d), hs) for d, hs in sorted(by_degree.items()))


# -----------------------------------------------------------
# Seed checks
# -----------------------------------------------------------
def _check_seed(
    target: GradedSubalgebra, seed: Sequence[Polynomial], bound: int, budget: int, threads: int
) -> None:
    for s in seed:
        if not target.contains(s):
            raise HypothesisViolationError(f"seed element {s} is not in the subalgebra", {"element": str(s)})

    verdict = is_reduced(seed, bound, budget=budget, threads=threads)
    if not verdict.independent:
        raise HypothesisViolationError(
            "seed is not algebraically independent", {"witness": str(verdict.witness)}
        )

    top = max(s.degree for s in seed)
    seeded = graded_slices(seed, top, budget=budget, threads=threads)
    for d in range(1, top + 1):
        for row in target.slice(d).rows:
            if not reduce(row, seeded.slice(d)).is_zero():
                raise HypothesisViolationError(
                    f"degree-{d} element {row} of the subalgebra is not generated by the seed",
                    {"element": str(row), "degree": d},
                )


# -----------------------------------------------------------
# Extraction
# -----------------------------------------------------------
def extract_free_generators(
    G: Sequence[Polynomial],
    bound: int,
    seed: Sequence[Polynomial] = (),
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> FreeGeneratorReport:
    G, seed = tuple(G), tuple(seed)
    require_homogeneous(G)
    require_homogeneous(seed, "seed element")
    top = max((g.degree for g in G + seed), default=0)
    if bound < max(top, 1):
        raise BoundTooSmallError(f"bound {bound} is below the largest generator degree {top}")

    target = graded_slices(G, bound, budget=budget, threads=threads)
    if seed:
        _check_seed(target, seed, bound, budget, threads)

    generators: List[Polynomial] = list(seed)
    sub: Dict[int, EchelonBasis] = {}
    for k in range(1, bound + 1):
        candidates = [g for g in generators if g.degree == k]
        candidates.extend(product_candidates(sub, k, budget, threads))
        prior = echelonize(candidates)
        basis, added = extend_basis(prior, target.slice(k).rows)
        if added and not independent_modulo(prior, added):
            raise InvariantFailure(f"degree-{k} generators meet the prior subalgebra")
        for h in added:
            log_engine_operation("KUROSH_GENERATOR_ADDED", {"degree": k, "generator": str(h)})
        generators.extend(added)
        if not basis.is_empty():
            sub[k] = basis

    certificates = _certify(target, generators, bound, budget, threads)
    report = FreeGeneratorReport(
        generators=tuple(generators),
        degrees=tuple(g.degree for g in generators),
        seed_retained=seed,
        bound=bound,
        certificates=certificates,
        leading_forms=tuple(generators),
    )
    log_engine_operation(
        "KUROSH_EXTRACTION_COMPLETE",
        {"generators": len(generators), "degrees": list(report.degrees), "bound": bound},
    )
    return report


def _certify(
    target: GradedSubalgebra,
    generators: Sequence[Polynomial],
    bound: int,
    budget: int,
    threads: int,
) -> Dict[str, str]:
    produced = graded_slices(generators, bound, budget=budget, threads=threads)
    for d in range(1, bound + 1):
        if produced.slice(d).rows != target.slice(d).rows:
            log_engine_operation("GENERATION_CHECK", {"degree": d}, success=False)
            raise InvariantFailure(f"generators do not reproduce the degree-{d} slice")

    independence = "vacuous"
    if generators:
        verdict = relation_search(generators, bound, budget=budget, threads=threads)
        if not verdict.independent:
            raise InvariantFailure(f"extracted generators satisfy the relation {verdict.witness}")
        independence = f"kernel_search<={bound}"
    return {
        "generation": f"slices_equal<={bound}",
        "independence": independence,
        "extension_steps": "verified",
    }
