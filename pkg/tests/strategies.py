from fractions import Fraction

from hypothesis import strategies as st

from Engine.algebra.polynomial import Polynomial
from Engine.magma.enumeration import shapes_of_degree
from Engine.magma.terms import Alphabet, Leaf, MonomialCode, Node, Word


def terms(alpha: Alphabet, max_leaves: int = 8):
    leaves = st.integers(0, len(alpha) - 1).map(Leaf)
    return st.recursive(
        leaves,
        lambda children: st.tuples(children, children).map(lambda lr: Node(*lr)),
        max_leaves=max_leaves,
    )


def codes_of_degree(alpha: Alphabet, n: int):
    return st.tuples(
        st.sampled_from(shapes_of_degree(n)),
        st.lists(st.integers(0, len(alpha) - 1), min_size=n, max_size=n),
    ).map(lambda sw: MonomialCode(sw[0], Word(tuple(sw[1]))))


def codes(alpha: Alphabet, max_degree: int = 4):
    return st.integers(1, max_degree).flatmap(lambda n: codes_of_degree(alpha, n))


coefficients = st.builds(
    Fraction,
    st.integers(-6, 6).filter(bool),
    st.integers(1, 4),
)


def polynomials(alpha: Alphabet, max_degree: int = 4, max_terms: int = 4):
    return st.dictionaries(codes(alpha, max_degree), coefficients, max_size=max_terms).map(
        lambda terms_: Polynomial(alpha, terms_)
    )


def homogeneous(alpha: Alphabet, n: int, max_terms: int = 3):
    return st.dictionaries(codes_of_degree(alpha, n), coefficients, min_size=1, max_size=max_terms).map(
        lambda terms_: Polynomial(alpha, terms_)
    )
