# Engine magma package
from Engine.magma.terms import (
    Alphabet,
    Leaf,
    MagmaTerm,
    MonomialCode,
    Node,
    Shape,
    Word,
    degree,
    embed,
    format_code,
    format_term,
    format_word,
    graft,
    leaf_code,
    product_type,
    sequence_type,
    substitute_term,
    unembed,
    ungraft,
)
from Engine.magma.enumeration import (
    DEFAULT_MONOMIAL_BUDGET,
    catalan,
    count_monomials,
    monomials_of_degree,
    product_type_respects_substitution,
    shapes_of_degree,
    terms_of_degree,
)
