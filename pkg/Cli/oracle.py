# Cli/oracle.py
"""
Brute-force verification harness.

Each check enumerates a small slice exhaustively, or draws a seeded random
family, and compares the engine against an independent computation. Reports
carry no timings, so two runs with one seed are byte-identical.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from Cli.config import SessionConfig
from Cli.parsing import parse_poly, parse_term
from Cli.schemas import OracleReportSchema, PropertyResultSchema
from Engine.algebra.polynomial import Polynomial, add, format_polynomial, mul
from Engine.algebra.substitution import SubstitutionMap, shape_class_evaluations, substitute
from Engine.independence.verdicts import (
    VerdictStatus,
    leading_forms_independent,
    relation_search,
    same_degree_fast_path,
)
from Engine.kurosh.slices import graded_slices
from Engine.linalg.echelon import echelonize
from Engine.magma.enumeration import (
    catalan,
    count_monomials,
    product_type_respects_substitution,
    shapes_of_degree,
    terms_of_degree,
)
from Engine.magma.terms import (
    Alphabet,
    MonomialCode,
    Node,
    Shape,
    Word,
    degree,
    embed,
    format_code,
    format_term,
    graft,
    product_type,
    ungraft,
    unembed,
)
from Engine.utils.logging_utils import log_engine_operation

Check = Tuple[int, Optional[str]]


# -----------------------------------------------------------
# Random families (numpy Generator, exact coefficients)
# -----------------------------------------------------------
def random_code(rng: np.random.Generator, alpha: Alphabet, n: int) -> MonomialCode:
    shapes = shapes_of_degree(n)
    shape = shapes[int(rng.integers(len(shapes)))]
    return MonomialCode(shape, Word(tuple(int(x) for x in rng.integers(0, len(alpha), size=n))))


def random_homogeneous(
    rng: np.random.Generator, alpha: Alphabet, n: int, max_terms: int = 3
) -> Polynomial:
    terms: Dict[MonomialCode, Fraction] = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        c = int(rng.integers(1, 6)) * (1 if rng.random() < 0.7 else -1)
        terms[random_code(rng, alpha, n)] = Fraction(c)
    return Polynomial(alpha, terms)


def random_independent_family(
    rng: np.random.Generator, alpha: Alphabet, n: int, size: int, max_terms: int = 3
) -> List[Polynomial]:
    """`size` linearly independent homogeneous polynomials of degree n."""
    family: List[Polynomial] = []
    while len(family) < size:
        candidate = random_homogeneous(rng, alpha, n, max_terms)
        if echelonize(family + [candidate]).rank == len(family) + 1:
            family.append(candidate)
    return family


def random_reduced_set(
    rng: np.random.Generator, alpha: Alphabet, size: int, dmax: int = 6
) -> List[Polynomial]:
    """
    Polynomials whose leading forms are pairwise distinct and algebraically
    independent, with random lower-degree tails. Leading forms have degree 2
    or 3.
    """
    while True:
        forms = [random_homogeneous(rng, alpha, int(rng.integers(2, 4))) for _ in range(size)]
        if len(set(forms)) != len(forms):
            continue
        reduced, _ = leading_forms_independent(forms, dmax)
        if not reduced:
            continue
        out = []
        for f in forms:
            tail_degree = int(rng.integers(1, f.degree))
            out.append(add(f, random_homogeneous(rng, alpha, tail_degree, max_terms=2)))
        return out


def dense_rank(vectors: Sequence[Polynomial]) -> int:
    """Rank by sympy over the union of supports."""
    columns = sorted({code for v in vectors for code in v.monomials()}, key=MonomialCode.sort_key)
    if not columns:
        return 0
    matrix = sympy.Matrix([
        [sympy.Rational(v.coefficient(code).numerator, v.coefficient(code).denominator) for code in columns]
        for v in vectors
    ])
    return int(matrix.rank())


# -----------------------------------------------------------
# Checks; each returns (checked count, counterexample or None)
# -----------------------------------------------------------
def _embedding_checks(alpha: Alphabet, bound: int, budget: int) -> Dict[str, Check]:
    results: Dict[str, List] = {
        "embedding_injective": [0, None],
        "embedding_round_trip": [0, None],
        "embedding_morphism": [0, None],
        "degree_triple": [0, None],
        "term_text_round_trip": [0, None],
        "shapes_cover_terms": [0, None],
    }

    def record(name: str, ok: bool, witness: str) -> None:
        results[name][0] += 1
        if not ok and results[name][1] is None:
            results[name][1] = witness

    for d in range(1, bound + 1):
        terms = terms_of_degree(alpha, d, budget)
        shapes = set(shapes_of_degree(d))
        seen: Dict[MonomialCode, str] = {}
        for t in terms:
            text = format_term(t, alpha)
            code = embed(t)
            record("embedding_injective", code not in seen, f"{seen.get(code)} and {text}")
            seen.setdefault(code, text)
            record("embedding_round_trip", unembed(code) == t, text)
            if isinstance(t, Node):
                record("embedding_morphism", code == graft(embed(t.left), embed(t.right)), text)
            record("degree_triple", degree(t) == code.shape.degree == code.word.degree, text)
            record("term_text_round_trip", parse_term(text, alpha) == t, text)
            record("shapes_cover_terms", product_type(t) in shapes, text)
        if len(seen) != count_monomials(len(alpha), d):
            record("embedding_injective", False, f"degree {d}: {len(seen)} codes")
    return {name: (count, witness) for name, (count, witness) in results.items()}


def _catalan_counts(bound: int) -> Check:
    checked = 0
    for n in range(1, max(bound, 7) + 1):
        checked += 1
        size = len(shapes_of_degree(n))
        if not size == catalan(n - 1) == int(sympy.catalan(n - 1)):
            return checked, f"degree {n}: {size} shapes"
    return checked, None


def _graft_cancellation(alpha: Alphabet, top: int) -> Check:
    codes = {d: [embed(t) for t in terms_of_degree(alpha, d)] for d in range(1, top)}
    origin: Dict[MonomialCode, Tuple[MonomialCode, MonomialCode]] = {}
    checked = 0
    for a in range(1, top):
        for b in range(1, top - a + 1):
            for c1 in codes[a]:
                for c2 in codes[b]:
                    checked += 1
                    g = graft(c1, c2)
                    if origin.setdefault(g, (c1, c2)) != (c1, c2) or ungraft(g) != (c1, c2):
                        return checked, format_code(g, alpha)
    return checked, None


def _word_cancellation(alpha: Alphabet, top: int) -> Check:
    words = [Word(seq) for n in range(1, top + 1) for seq in product(range(len(alpha)), repeat=n)]
    by_left: Dict[Tuple[Word, int], Tuple[Word, Word]] = {}
    by_right: Dict[Tuple[Word, int], Tuple[Word, Word]] = {}
    checked = 0
    for u in words:
        for v in words:
            checked += 1
            w = u + v
            if by_left.setdefault((w, u.degree), (u, v)) != (u, v):
                return checked, f"{u.seq} . {v.seq}"
            if by_right.setdefault((w, v.degree), (u, v)) != (u, v):
                return checked, f"{u.seq} . {v.seq}"
    return checked, None


def _product_type_substitution(alpha: Alphabet, rng: np.random.Generator, top: int) -> Check:
    X = Alphabet.indeterminates(2)
    monomials = [t for d in range(1, top + 1) for t in terms_of_degree(X, d)]
    args_pool = terms_of_degree(alpha, 2)
    checked = 0
    for M in monomials:
        for M_prime in monomials:
            args = [args_pool[int(i)] for i in rng.integers(0, len(args_pool), size=2)]
            checked += 1
            if not product_type_respects_substitution(M, M_prime, args):
                return checked, f"{format_term(M, X)} vs {format_term(M_prime, X)}"
    return checked, None


def _substitution_homogeneity(alpha: Alphabet, rng: np.random.Generator, samples: int) -> Check:
    for i in range(samples):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(1, 4))
        M = random_code(rng, Alphabet.indeterminates(n), int(rng.integers(1, 6)))
        images = [random_homogeneous(rng, alpha, k) for _ in range(n)]
        P = Polynomial.monomial(Alphabet.indeterminates(n), M)
        result = substitute(P, SubstitutionMap(tuple(images)))
        if result.is_zero() or not result.is_homogeneous() or result.degree != k * M.degree:
            return i + 1, format_polynomial(P)
    return samples, None


def _shape_class_rank(alpha: Alphabet, rng: np.random.Generator, samples: int) -> Check:
    Z = Alphabet.of("z1", "z2", "z3")
    illustration = [parse_poly("(z1,z2)", Z), parse_poly("((z3,z3),z2)", Z)]
    evaluations = shape_class_evaluations(Shape("100"), illustration)
    if echelonize(evaluations).rank != 4 or dense_rank(evaluations) != 4:
        return 1, "illustration"
    for i in range(samples):
        n = int(rng.integers(1, 4))
        j = int(rng.integers(1, 4))
        k = int(rng.integers(1, 3))
        while count_monomials(len(alpha), k) < n:
            k += 1
        ps = random_independent_family(rng, alpha, k, n)
        shapes = shapes_of_degree(j)
        shape = shapes[int(rng.integers(len(shapes)))]
        rank = echelonize(shape_class_evaluations(shape, ps)).rank
        if rank != n ** j:
            return i + 2, f"shape {shape.bits} on {[format_polynomial(p) for p in ps]}"
    return samples + 1, None


def _free_dimension_law(alpha: Alphabet, bound: int) -> Check:
    checked = 0
    for n in (1, 2):
        if n > len(alpha):
            continue
        top = bound if n == 1 else min(bound, 6)
        gens = [Polynomial.generator(alpha, i) for i in range(n)]
        dims = graded_slices(gens, top).dims()
        for d in range(1, top + 1):
            checked += 1
            if dims[d] != n ** d * catalan(d - 1):
                return checked, f"{n} generators, degree {d}: dim {dims[d]}"
    square = mul(Polynomial.generator(alpha, 0), Polynomial.generator(alpha, 0))
    dims = graded_slices([square], bound).dims()
    for d in range(1, bound + 1):
        checked += 1
        expected = catalan(d // 2 - 1) if d % 2 == 0 else 0
        if dims[d] != expected:
            return checked, f"one degree-2 generator, degree {d}: dim {dims[d]}"
    return checked, None


def _same_degree_families(
    alpha: Alphabet, rng: np.random.Generator, samples: int, budget: int, threads: int
) -> Check:
    for i in range(samples):
        k = int(rng.integers(1, 4))
        size = int(rng.integers(1, min(3, count_monomials(len(alpha), k)) + 1))
        family = random_independent_family(rng, alpha, k, size)
        fast = same_degree_fast_path(family)
        verdict = relation_search(family, 3 * k, budget=budget, threads=threads)
        if fast.status is not VerdictStatus.REDUCED_CERTIFIED or not verdict.independent:
            return i + 1, str([format_polynomial(p) for p in family])
    return samples, None


def _reduced_sets(
    alpha: Alphabet, rng: np.random.Generator, samples: int, budget: int, threads: int
) -> Check:
    for i in range(samples):
        ps = random_reduced_set(rng, alpha, int(rng.integers(1, 4 if len(alpha) > 1 else 3)))
        verdict = relation_search(ps, 6, budget=budget, threads=threads)
        if not verdict.independent:
            return i + 1, str([format_polynomial(p) for p in ps])
    return samples, None


# -----------------------------------------------------------
# Suite
# -----------------------------------------------------------
def oracle_suite(config: SessionConfig, seed: int, samples: int) -> OracleReportSchema:
    rng = np.random.default_rng(seed)
    alpha = config.alphabet
    pair = Alphabet(alpha.symbols[:2])
    budget, threads = config.monomial_budget, config.threads

    checks: List[Tuple[str, Callable[[], Check]]] = [
        ("catalan_counts", lambda: _catalan_counts(config.bound)),
        ("graft_cancellation", lambda: _graft_cancellation(pair, min(config.bound, 5))),
        ("word_cancellation", lambda: _word_cancellation(pair, 3)),
        ("product_type_substitution", lambda: _product_type_substitution(pair, rng, min(config.bound, 4))),
        ("substitution_homogeneity", lambda: _substitution_homogeneity(pair, rng, samples)),
        ("shape_class_rank", lambda: _shape_class_rank(pair, rng, samples)),
        ("free_dimension_law", lambda: _free_dimension_law(alpha, config.bound)),
        ("same_degree_independence", lambda: _same_degree_families(pair, rng, samples, budget, threads)),
        ("reduced_set_independence", lambda: _reduced_sets(pair, rng, samples, budget, threads)),
    ]

    results: List[PropertyResultSchema] = [
        PropertyResultSchema(name=name, passed=witness is None, checked=count, counterexample=witness)
        for name, (count, witness) in _embedding_checks(alpha, config.bound, budget).items()
    ]
    for name, run in checks:
        count, witness = run()
        results.append(PropertyResultSchema(name=name, passed=witness is None, checked=count, counterexample=witness))
        log_engine_operation("ORACLE_PROPERTY", {"name": name, "checked": count}, success=witness is None)

    return OracleReportSchema(
        alphabet=list(alpha.symbols),
        bound=config.bound,
        seed=seed,
        samples=samples,
        passed=all(r.passed for r in results),
        properties=results,
    )
