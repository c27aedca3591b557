# Engine/kurosh/leading_forms.py
"""
Free generating sets for subalgebras with inhomogeneous generators, through
their leading forms.

The subalgebra is explored up to a degree bound: starting from G, rows are
triangularized with pivots in their top-degree component and multiplied
pairwise while the product degree stays within the bound. Top components of
the degree-d rows then span the leading forms of degree d. A free generating
set of that homogeneous algebra is lifted back row by row.

Elements of the subalgebra of degree <= bound that only arise through
cancellation above the bound are outside the explored space; every result is
stated relative to the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from Engine.algebra.polynomial import Polynomial, leading_form, linear_combination, mul, pi_n
from Engine.independence.verdicts import VerdictStatus, is_reduced
from Engine.linalg.relations import RelationTracker, degree_descending_key, express_in_span
from Engine.magma.enumeration import DEFAULT_MONOMIAL_BUDGET
from Engine.utils.errors import (
    AlphabetMismatchError,
    BoundTooSmallError,
    BudgetExceededError,
    HypothesisViolationError,
    InvariantFailure,
    ZeroPolynomialError,
)
from Engine.utils.logging_utils import log_engine_operation
from Engine.utils.parallel import ordered_map
from Engine.kurosh.generators import FreeGeneratorReport, extract_free_generators


@dataclass
class LeadingFormClosure:
    bound: int
    tracker: RelationTracker
    rows: Tuple[Polynomial, ...]

    def by_degree(self) -> Dict[int, List[Polynomial]]:
        out: Dict[int, List[Polynomial]] = {}
        for row in self.rows:
            out.setdefault(row.degree, []).append(row)
        return dict(sorted(out.items()))

    def leading_slices(self) -> Dict[int, List[Polynomial]]:
        """Per degree, a linearly independent spanning list of the leading forms."""
        return {d: [pi_n(r, d) for r in rows] for d, rows in self.by_degree().items()}

    def dims(self) -> Dict[int, int]:
        return {d: len(rows) for d, rows in self.by_degree().items()}

    def contains(self, p: Polynomial) -> bool:
        return p.is_zero() or self.tracker.express(p) is not None

    def preimage(self, h: Polynomial) -> Optional[Polynomial]:
        """An element of the explored space whose leading form is the homogeneous h."""
        rows = self.by_degree().get(h.degree, [])
        if not rows:
            return None
        coeffs = express_in_span(h.alphabet, [pi_n(r, h.degree) for r in rows], h)
        if coeffs is None:
            return None
        return linear_combination(h.alphabet, ((c, rows[i]) for i, c in coeffs.items()))


def leading_form_closure(
    G: Sequence[Polynomial],
    bound: int,
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> LeadingFormClosure:
    G = tuple(G)
    if not G:
        raise HypothesisViolationError("need at least one generator")
    alphabet = G[0].alphabet
    for g in G:
        if g.is_zero():
            raise ZeroPolynomialError("generators must be nonzero")
        if g.alphabet != alphabet:
            raise AlphabetMismatchError("generators live over different alphabets")
        if g.degree > bound:
            raise BoundTooSmallError(f"generator of degree {g.degree} exceeds the truncation bound {bound}")

    tracker = RelationTracker(alphabet, degree_descending_key)
    rows: List[Polynomial] = []
    queue: List[Polynomial] = list(G)
    while queue:
        batch, queue = queue, []
        for v in batch:
            row = tracker.insert(v)
            if row is None:
                continue
            partners = [r for r in rows if r.degree + row.degree <= bound]
            if 2 * row.degree <= bound:
                partners.append(row)
            rows.append(row)
            pairs = [(row, r) for r in partners] + [(r, row) for r in partners if r is not row]
            queue.extend(ordered_map(lambda pair: mul(pair[0], pair[1]), pairs, threads))
            if len(rows) + len(queue) > budget:
                raise BudgetExceededError("leading-form closure", len(rows) + len(queue), budget)

    closure = LeadingFormClosure(bound, tracker, tuple(rows))
    log_engine_operation("LEADING_FORM_CLOSURE_COMPLETE", {"generators": len(G), "bound": bound, "dims": closure.dims()})
    return closure


def lift_leading_forms(
    G: Sequence[Polynomial],
    bound: int,
    seed: Sequence[Polynomial] = (),
    *,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
    threads: int = 1,
) -> FreeGeneratorReport:
    G, seed = tuple(G), tuple(seed)
    for s in seed:
        if s.is_zero():
            raise ZeroPolynomialError("seed elements must be nonzero")
        if s.degree > bound:
            raise BoundTooSmallError(f"seed element of degree {s.degree} exceeds bound {bound}")
    if seed:
        verdict = is_reduced(seed, bound, budget=budget, threads=threads)
        if verdict.status is not VerdictStatus.REDUCED_CERTIFIED:
            raise HypothesisViolationError("seed is not reduced", {"verdict": verdict.status.value})

    closure = leading_form_closure(G, bound, budget=budget, threads=threads)
    for s in seed:
        if not closure.contains(s):
            raise HypothesisViolationError(f"seed element {s} is not in the subalgebra", {"element": str(s)})

    forms = [h for hs in closure.leading_slices().values() for h in hs]
    seed_forms = {leading_form(s): s for s in seed}
    inner = extract_free_generators(forms, bound, tuple(seed_forms), budget=budget, threads=threads)

    lifted: List[Polynomial] = []
    for h in inner.generators:
        f = seed_forms.get(h) or closure.preimage(h)
        if f is None or leading_form(f) != h:
            raise InvariantFailure(f"no preimage with leading form {h}")
        lifted.append(f)

    if lifted:
        check = is_reduced(lifted, bound, budget=budget, threads=threads)
        if check.status is not VerdictStatus.REDUCED_CERTIFIED:
            raise InvariantFailure("lifted generators are not reduced")

    report = FreeGeneratorReport(
        generators=tuple(lifted),
        degrees=tuple(f.degree for f in lifted),
        seed_retained=seed,
        bound=bound,
        certificates={
            "generation": f"leading_form_slices_equal<={bound}",
            "independence": "reduced_set" if lifted else "vacuous",
            "extension_steps": inner.certificates.get("extension_steps", "verified"),
        },
        leading_forms=inner.generators,
    )
    log_engine_operation("LEADING_FORM_LIFT_COMPLETE", {"generators": len(lifted), "degrees": list(report.degrees), "bound": bound})
    return report
