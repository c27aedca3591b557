from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from Engine.algebra.polynomial import (
    Polynomial,
    add,
    format_polynomial,
    homogeneous_components,
    leading_form,
    linear_combination,
    mul,
    pi_n,
    product_type_split,
    scale,
)
from Engine.magma.terms import Alphabet, Shape
from Engine.utils.errors import AlphabetMismatchError, ZeroPolynomialError
from tests.strategies import homogeneous, polynomials

Z2 = Alphabet.of("z1", "z2")


def test_section_one_examples(Z4, poly):
    p1 = poly("((z2,z1),(z4,z4)) + 2*(z1,z1)", Z4)
    p2 = poly("4*(z3,(z1,z1)) + z2 + 3*z3", Z4)
    assert p1.degree == 4
    assert pi_n(p1, 2) == poly("2*(z1,z1)", Z4)
    assert len(p2) == 3
    assert p2.degree == 3
    assert leading_form(p2) == poly("4*(z3,(z1,z1))", Z4)
    assert pi_n(p2, 5).is_zero()


def test_zero_polynomial_has_no_degree(Z2):
    zero = Polynomial.zero(Z2)
    assert zero.degree is None
    assert zero.is_zero()
    assert not zero.is_homogeneous()
    assert format_polynomial(zero) == "0"
    with pytest.raises(ZeroPolynomialError):
        leading_form(zero)


def test_add_and_scale(Z2, poly):
    p = poly("(z1,z2)", Z2)
    assert add(p, Polynomial.zero(Z2)) == p
    assert add(p, scale(-1, p)).is_zero()
    assert scale(1, p) == p
    assert scale(0, p).is_zero()
    assert scale(2, poly("(z1,z1)", Z2)) == poly("2*(z1,z1)", Z2)
    assert p - p == Polynomial.zero(Z2)


def test_zero_coefficients_are_pruned(Z2, poly):
    p = poly("z1 + (z1,z2) - z1", Z2)
    assert len(p) == 1
    assert p.coefficient(poly("z1", Z2).monomials()[0]) == 0


def test_mul_examples(Z2, Z3, poly):
    assert mul(poly("z1", Z2), poly("z2", Z2)) == poly("(z1,z2)", Z2)
    assert mul(poly("z1 + z2", Z2), poly("z1", Z2)) == poly("(z1,z1) + (z2,z1)", Z2)
    p1, p2 = poly("(z1,z2)", Z3), poly("((z3,z3),z2)", Z3)
    assert mul(p1, p2) == poly("((z1,z2),((z3,z3),z2))", Z3)
    assert p1 * p2 == mul(p1, p2)
    assert mul(p1, Polynomial.zero(Z3)).is_zero()


def test_alphabet_mismatch(Z2, Z3, poly):
    with pytest.raises(AlphabetMismatchError):
        add(poly("z1", Z2), poly("z1", Z3))
    with pytest.raises(AlphabetMismatchError):
        mul(poly("z1", Z2), poly("z1", Z3))


def test_leading_form_picks_top_slice(Z1, poly):
    assert leading_form(poly("z1 + (z1,z1)", Z1)) == poly("(z1,z1)", Z1)
    h = poly("(z1,(z1,z1)) + ((z1,z1),z1)", Z1)
    assert leading_form(h) == h


def test_product_type_split(Z3, poly):
    p3 = poly("((z2,z2),z1) - 4*((z1,z2),z1)", Z3)
    split = product_type_split(p3, 3)
    assert list(split) == [Shape("11000")]
    assert split[Shape("11000")] == p3

    assert len(product_type_split(poly("(z1,z2)", Z3), 2)) == 1

    q = poly("(z1,(z2,z3)) + ((z1,z2),z3)", Z3)
    split = product_type_split(q, 3)
    assert [s.bits for s in split] == ["10100", "11000"]
    assert linear_combination(Z3, [(1, v) for v in split.values()]) == q


def test_canonical_printing(Z4, poly):
    p = poly("3*z3 + z2 + 4*(z3,(z1,z1))", Z4)
    assert str(p) == "z2 + 3*z3 + 4*(z3,(z1,z1))"
    assert str(poly("-3*z1 + 1/2*(z1,z2) - z2", Z4)) == "-3*z1 - z2 + 1/2*(z1,z2)"


def test_homogeneous_components(Z2, poly):
    p = poly("z1 + (z1,z2) + 2*(z2,z2) + ((z1,z1),z1)", Z2)
    parts = homogeneous_components(p)
    assert list(parts) == [1, 2, 3]
    assert parts[2] == poly("(z1,z2) + 2*(z2,z2)", Z2)


def test_coefficients_are_exact(Z2, poly):
    p = poly("1/3*z1", Z2)
    assert scale(3, p) == poly("z1", Z2)
    assert p.coefficient(poly("z1", Z2).monomials()[0]) == Fraction(1, 3)


# -----------------------------------------------------------
# Algebraic laws
# -----------------------------------------------------------
@settings(max_examples=60)
@given(polynomials(Z2, 3), polynomials(Z2, 3), polynomials(Z2, 3))
def test_bilinearity(p, q, r):
    assert mul(add(p, q), r) == add(mul(p, r), mul(q, r))
    assert mul(r, add(p, q)) == add(mul(r, p), mul(r, q))


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_grading(a, b, data):
    p = data.draw(homogeneous(Z2, a))
    q = data.draw(homogeneous(Z2, b))
    product = mul(p, q)
    assert product.is_homogeneous()
    assert product.degree == a + b


@given(polynomials(Z2, 4, 6))
def test_projections_decompose(p):
    total = linear_combination(Z2, [(1, pi_n(p, n)) for n in range(1, 5)])
    assert total == p
    for n in range(1, 5):
        assert pi_n(pi_n(p, n), n) == pi_n(p, n)
        for m in range(1, 5):
            if m != n:
                assert pi_n(pi_n(p, n), m).is_zero()


@given(polynomials(Z2), polynomials(Z2))
def test_value_semantics(p, q):
    assert (p == q) == (p.terms == q.terms)
    if p == q:
        assert hash(p) == hash(q)
