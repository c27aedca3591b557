# Engine/magma/enumeration.py
"""Degree-sliced enumeration of shapes, terms and monomial codes."""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

from Engine.magma.terms import (
    Alphabet,
    Leaf,
    MagmaTerm,
    MonomialCode,
    Node,
    Shape,
    Word,
    product_type,
    substitute_term,
)
from Engine.utils.errors import BudgetExceededError, DegreeMismatchError, HypothesisViolationError

DEFAULT_MONOMIAL_BUDGET = 10**6


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number via the convolution recurrence C_{n+1} = sum C_i C_{n-i}."""
    if n <= 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def count_monomials(alphabet_size: int, n: int) -> int:
    return alphabet_size**n * catalan(n - 1)


def _require_degree(n: int) -> None:
    if n < 1:
        raise HypothesisViolationError(f"degree must be positive, got {n}")


@lru_cache(maxsize=64)
def _shape_bits(n: int) -> Tuple[str, ...]:
    if n == 1:
        return ("0",)
    out = [
        "1" + left + right
        for i in range(1, n)
        for left in _shape_bits(i)
        for right in _shape_bits(n - i)
    ]
    return tuple(sorted(out))


def shapes_of_degree(n: int) -> List[Shape]:
    _require_degree(n)
    return [Shape(bits) for bits in _shape_bits(n)]


def monomials_of_degree(
    alpha: Alphabet, n: int, budget: int = DEFAULT_MONOMIAL_BUDGET
) -> List[MonomialCode]:
    _require_degree(n)
    size = count_monomials(len(alpha), n)
    if size > budget:
        raise BudgetExceededError(f"degree-{n} monomial slice over {len(alpha)} symbols", size, budget)
    words = [Word(seq) for seq in product(range(len(alpha)), repeat=n)]
    return [MonomialCode(shape, word) for shape in shapes_of_degree(n) for word in words]


def terms_of_degree(
    alpha: Alphabet, n: int, budget: int = DEFAULT_MONOMIAL_BUDGET
) -> List[MagmaTerm]:
    """All terms of degree n built directly by splitting, without going through codes."""
    _require_degree(n)
    size = count_monomials(len(alpha), n)
    if size > budget:
        raise BudgetExceededError(f"degree-{n} term slice over {len(alpha)} symbols", size, budget)
    table: List[List[MagmaTerm]] = [[], [Leaf(i) for i in range(len(alpha))]]
    for d in range(2, n + 1):
        table.append([
            Node(left, right)
            for i in range(1, d)
            for left in table[i]
            for right in table[d - i]
        ])
    return table[n]


def product_type_respects_substitution(
    M: MagmaTerm, M_prime: MagmaTerm, args: Sequence[MagmaTerm]
) -> bool:
    """
    Different product types stay different after substituting arguments of
    one common degree. Returns False only on a counterexample.
    """
    if not args:
        raise DegreeMismatchError("at least one argument is required")
    degrees = {a.degree for a in args}
    if len(degrees) != 1:
        raise DegreeMismatchError(f"arguments must share one degree, got {sorted(degrees)}")
    left = substitute_term(M, args)
    right = substitute_term(M_prime, args)
    if product_type(M) == product_type(M_prime):
        return True
    return product_type(left) != product_type(right)
