from collections import Counter
from typing import List

import numpy as np
import pytest

from Cli.oracle import random_homogeneous, random_reduced_set
from Engine.algebra.polynomial import Polynomial, add, leading_form, mul, scale
from Engine.independence import VerdictStatus, is_reduced, relation_search
from Engine.kurosh import (
    extension_step_holds,
    extract_free_generators,
    graded_slices,
    leading_form_closure,
    lift_leading_forms,
)
from Engine.magma.terms import Alphabet
from Engine.utils.errors import (
    BoundTooSmallError,
    BudgetExceededError,
    HypothesisViolationError,
    InhomogeneousInputError,
    ZeroPolynomialError,
)

Z2 = Alphabet.of("z1", "z2")


# -----------------------------------------------------------
# Graded slices
# -----------------------------------------------------------
def test_slice_dimensions(Z1, Z2, poly):
    assert graded_slices([poly("z1", Z1)], 3).dims() == {1: 1, 2: 1, 3: 2}
    assert graded_slices([poly("(z1,z1)", Z1)], 6).dims() == {1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 2}
    assert graded_slices([poly("z1", Z2), poly("z2", Z2)], 3).dims() == {1: 2, 2: 4, 3: 16}


def test_slice_errors(Z2, poly):
    with pytest.raises(InhomogeneousInputError):
        graded_slices([poly("z1 + (z1,z1)", Z2)], 3)
    with pytest.raises(ZeroPolynomialError):
        graded_slices([poly("0", Z2)], 3)
    with pytest.raises(BoundTooSmallError):
        graded_slices([poly("((z1,z1),z1)", Z2)], 2)
    with pytest.raises(HypothesisViolationError):
        graded_slices([poly("z1", Z2)], 0)
    with pytest.raises(BudgetExceededError):
        graded_slices([poly("z1", Z2), poly("z2", Z2)], 4, budget=10)


def test_contains_above_bound_is_refused(Z2, poly):
    sub = graded_slices([poly("z1", Z2)], 2)
    with pytest.raises(BoundTooSmallError):
        sub.contains(poly("((z1,z1),z1)", Z2))


def test_random_expressions_lie_in_the_slices(Z2, poly):
    G = [poly("(z1,z2) + (z2,z2)", Z2), poly("((z1,z1),z2) - (z2,(z1,z1))", Z2)]
    sub = graded_slices(G, 6)
    rng = np.random.default_rng(17)
    pool = list(G)
    checked = 0
    while checked < 200:
        a, b = (pool[int(i)] for i in rng.integers(0, len(pool), size=2))
        if a.degree + b.degree <= 6:
            product = mul(a, b)
            pool.append(product)
            candidate = product
        else:
            same = [p for p in pool if p.degree == a.degree]
            candidate = add(a, scale(int(rng.integers(-3, 4)), same[int(rng.integers(len(same)))]))
        assert sub.contains(candidate)
        checked += 1
    assert not sub.contains(poly("(z1,z1)", Z2))


# -----------------------------------------------------------
# Extraction
# -----------------------------------------------------------
def test_extract_drops_decomposable_generators(Z1, poly):
    report = extract_free_generators([poly("z1", Z1), poly("(z1,z1)", Z1)], 3)
    assert report.generators == (poly("z1", Z1),)
    assert report.degrees == (1,)
    assert report.certificates == {
        "generation": "slices_equal<=3",
        "independence": "kernel_search<=3",
        "extension_steps": "verified",
    }


def test_extract_keeps_free_generators(Z1, poly):
    G = [poly("(z1,z1)", Z1), poly("((z1,z1),z1)", Z1), poly("(z1,(z1,z1))", Z1)]
    report = extract_free_generators(G, 5)
    assert report.degrees == (2, 3, 3)
    assert set(report.generators) == set(G)


def test_extract_three_generators_at_bound_six(Z1, poly):
    G = [poly("(z1,z1)", Z1), poly("((z1,z1),z1)", Z1), poly("(z1,(z1,z1))", Z1)]
    report = extract_free_generators(G, 6)
    assert report.degrees == (2, 3, 3)
    assert graded_slices(report.generators, 6).dims() == graded_slices(G, 6).dims()
    assert relation_search(report.generators, 6).independent


def test_extract_with_seed(Z2, poly):
    report = extract_free_generators([poly("z1", Z2), poly("(z2,z2)", Z2)], 4, seed=[poly("z1", Z2)])
    assert report.generators == (poly("z1", Z2), poly("(z2,z2)", Z2))
    assert report.seed_retained == (poly("z1", Z2),)


def test_seed_hypotheses(Z2, poly):
    with pytest.raises(HypothesisViolationError):
        # z2 is not generated by the seed in degree 1
        extract_free_generators([poly("z1", Z2), poly("z2", Z2)], 3, seed=[poly("z1", Z2)])
    with pytest.raises(HypothesisViolationError):
        extract_free_generators([poly("z1", Z2)], 3, seed=[poly("z2", Z2)])
    with pytest.raises(HypothesisViolationError):
        extract_free_generators([poly("z1", Z2)], 3, seed=[poly("z1", Z2), poly("(z1,z1)", Z2)])


def test_extract_errors(Z2, poly):
    with pytest.raises(InhomogeneousInputError):
        extract_free_generators([poly("z1 + (z1,z2)", Z2)], 3)
    with pytest.raises(BoundTooSmallError):
        extract_free_generators([poly("((z1,z2),z2)", Z2)], 2)


def test_extract_empty_set_is_vacuous():
    report = extract_free_generators([], 3)
    assert report.generators == ()
    assert report.certificates["independence"] == "vacuous"


def test_extension_step(Z2, poly):
    assert extension_step_holds([poly("z1", Z2)], [poly("(z2,z2)", Z2)], 3)
    assert not extension_step_holds([poly("z1", Z2)], [poly("(z1,z1) + (z2,z2)", Z2), poly("(z2,z2)", Z2)], 3)
    assert not extension_step_holds([], [poly("(z1,z2)", Z2), poly("2*(z1,z2)", Z2)], 3)
    with pytest.raises(BoundTooSmallError):
        extension_step_holds([], [poly("((z1,z2),z2)", Z2)], 2)


def test_refining_the_bound_extends_the_report(Z2, poly):
    G = [poly("(z1,z2)", Z2), poly("(z1,z2) + (z2,z1)", Z2), poly("((z1,z2),(z1,z2)) + (((z1,z1),z1),z2)", Z2)]
    reports = [extract_free_generators(G, b) for b in range(4, 7)]
    for small, large in zip(reports, reports[1:]):
        assert large.generators[: len(small.generators)] == small.generators
        assert all(g.degree > small.bound for g in large.generators[len(small.generators):])


def _check_homogeneous_families(count: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        G = [random_homogeneous(rng, Z2, int(rng.integers(2, 4))) for _ in range(int(rng.integers(2, 4)))]
        bound = 6
        report = extract_free_generators(G, bound)
        assert graded_slices(report.generators, bound).dims() == graded_slices(G, bound).dims()
        assert relation_search(report.generators, bound).independent
        available = Counter(g.degree for g in G)
        assert all(n <= available[d] for d, n in Counter(report.degrees).items())


def test_homogeneous_families():
    _check_homogeneous_families(5, seed=31)


@pytest.mark.slow
def test_homogeneous_families_at_scale():
    _check_homogeneous_families(100, seed=131)


# -----------------------------------------------------------
# Leading forms
# -----------------------------------------------------------
def test_leading_form_closure_dims(Z1, poly):
    closure = leading_form_closure([poly("z1", Z1)], 3)
    assert closure.dims() == {1: 1, 2: 1, 3: 2}
    assert closure.contains(poly("((z1,z1),z1) - 2*z1", Z1))
    assert closure.contains(poly("(z1,(z1,z1)) + (z1,z1) + z1", Z1))
    assert not closure.contains(poly("(z1,((z1,z1),z1))", Z1))


def test_lift_example(Z2, poly):
    G = [poly("z1 + z2", Z2), poly("z2 + (z1,z1)", Z2)]
    report = lift_leading_forms(G, 5)
    assert report.degrees == (1, 2)
    assert report.generators == (
        poly("z1 + z2", Z2),
        poly("(z1,z2) + (z2,z1) + (z2,z2) - z2", Z2),
    )
    assert report.leading_forms == tuple(leading_form(f) for f in report.generators)
    assert report.certificates["generation"] == "leading_form_slices_equal<=5"
    assert report.certificates["independence"] == "reduced_set"


def test_lift_of_homogeneous_input_matches_extraction(Z1, poly):
    G = [poly("z1", Z1), poly("(z1,z1)", Z1)]
    assert lift_leading_forms(G, 3).generators == extract_free_generators(G, 3).generators


def test_lift_of_single_generator_is_the_input(Z1, poly):
    g = poly("z1 + (z1,z1)", Z1)
    report = lift_leading_forms([g], 6)
    assert report.generators == (g,)
    assert report.leading_forms == (poly("(z1,z1)", Z1),)


def test_lift_separates_shared_leading_forms(Z2, poly):
    G = [poly("z1 + (z1,z1)", Z2), poly("z2 + (z1,z1)", Z2)]
    report = lift_leading_forms(G, 5)
    assert report.generators == (
        poly("z1 - z2", Z2),
        poly("z2 + (z1,z2) + (z2,z1) - (z2,z2)", Z2),
    )
    assert is_reduced(report.generators, 5).status is VerdictStatus.REDUCED_CERTIFIED


def test_lift_errors(Z2, poly):
    with pytest.raises(HypothesisViolationError):
        lift_leading_forms([poly("z1", Z2)], 3, seed=[poly("z1", Z2), poly("z1 + (z1,z1)", Z2)])
    with pytest.raises(HypothesisViolationError):
        lift_leading_forms([poly("z1 + (z1,z1)", Z2)], 3, seed=[poly("z2", Z2)])
    with pytest.raises(BoundTooSmallError):
        lift_leading_forms([poly("z1 + ((z1,z1),z1)", Z2)], 2)
    with pytest.raises(ZeroPolynomialError):
        lift_leading_forms([poly("0", Z2)], 2)


def _check_reduced_families(count: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        ps = random_reduced_set(rng, Z2, 2)
        report = lift_leading_forms(ps, 6)
        assert sorted(report.degrees) == sorted(p.degree for p in ps)
        assert report.certificates["independence"] == "reduced_set"


def test_reduced_families_lift_to_free_generators():
    _check_reduced_families(3, seed=41)


@pytest.mark.slow
def test_reduced_families_lift_at_scale():
    _check_reduced_families(100, seed=141)


def _random_inhomogeneous_set(rng: np.random.Generator) -> List[Polynomial]:
    size = int(rng.integers(2, 4))
    G: List[Polynomial] = []
    while len(G) < size:
        top = int(rng.integers(1, 4))
        p = random_homogeneous(rng, Z2, top)
        if top > 1 and rng.random() < 0.7:
            p = add(p, random_homogeneous(rng, Z2, int(rng.integers(1, top))))
        if p not in G:
            G.append(p)
    if G[0].degree > 1 and rng.random() < 0.4:
        # same leading form as G[0]
        G.append(add(G[0], random_homogeneous(rng, Z2, 1)))
    return G


def _check_inhomogeneous_lifts(count: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    bound = 5
    for _ in range(count):
        G = _random_inhomogeneous_set(rng)
        report = lift_leading_forms(G, bound)
        closure = leading_form_closure(G, bound)
        forms = [h for hs in closure.leading_slices().values() for h in hs]
        expected = graded_slices(forms, bound)
        actual = graded_slices(report.leading_forms, bound)
        assert all(actual.slice(d) == expected.slice(d) for d in range(1, bound + 1))
        assert is_reduced(report.generators, bound).status is VerdictStatus.REDUCED_CERTIFIED


def test_inhomogeneous_lifts():
    _check_inhomogeneous_lifts(3, seed=51)


@pytest.mark.slow
def test_inhomogeneous_lifts_at_scale():
    _check_inhomogeneous_lifts(20, seed=151)

