# Engine/algebra/polynomial.py
"""
Exact sparse polynomials of the free non-associative algebra over Q.

A polynomial maps monomial codes to nonzero `Fraction` coefficients. Terms are
kept in canonical monomial order, so iteration, printing and pivot choice are
deterministic. The zero polynomial is the empty map and has degree None.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from Engine.magma.terms import (
    Alphabet,
    MonomialCode,
    Shape,
    format_code,
    graft,
    leaf_code,
)
from Engine.utils.errors import AlphabetMismatchError, ZeroPolynomialError

Scalar = Union[int, Fraction]


def _canonical(terms: Mapping[MonomialCode, Scalar]) -> Dict[MonomialCode, Fraction]:
    items = [(code, Fraction(c)) for code, c in terms.items() if c != 0]
    items.sort(key=lambda kv: kv[0].sort_key())
    return dict(items)


class Polynomial:
    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[MonomialCode, Scalar]] = None):
        self.alphabet = alphabet
        self._terms: Dict[MonomialCode, Fraction] = _canonical(terms or {})
        self._hash: Optional[int] = None

    # ---- constructors
    @classmethod
    def zero(cls, alphabet: Alphabet) -> "Polynomial":
        return cls(alphabet)

    @classmethod
    def monomial(cls, alphabet: Alphabet, code: MonomialCode, coeff: Scalar = 1) -> "Polynomial":
        return cls(alphabet, {code: coeff})

    @classmethod
    def generator(cls, alphabet: Alphabet, index: int) -> "Polynomial":
        return cls(alphabet, {leaf_code(index): 1})

    # ---- inspection
    @property
    def terms(self) -> Mapping[MonomialCode, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[MonomialCode, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> Tuple[MonomialCode, ...]:
        return tuple(self._terms)

    def coefficient(self, code: MonomialCode) -> Fraction:
        return self._terms.get(code, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Optional[int]:
        if not self._terms:
            return None
        # last key in canonical order has the largest degree
        return next(reversed(self._terms)).degree

    @property
    def min_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return next(iter(self._terms)).degree

    def is_homogeneous(self) -> bool:
        return bool(self._terms) and self.degree == self.min_degree

    def __len__(self) -> int:
        return len(self._terms)

    # ---- value semantics
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    # ---- arithmetic sugar
    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, scale(-1, other))

    def __neg__(self) -> "Polynomial":
        return scale(-1, self)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        return scale(other, self)


# -----------------------------------------------------------
# Vector space and product
# -----------------------------------------------------------
def _check_same_alphabet(p: Polynomial, q: Polynomial) -> None:
    if p.alphabet != q.alphabet:
        raise AlphabetMismatchError(
            f"alphabets differ: {list(p.alphabet.symbols)} vs {list(q.alphabet.symbols)}"
        )


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_alphabet(p, q)
    if q.is_zero():
        return p
    if p.is_zero():
        return q
    out: Dict[MonomialCode, Fraction] = dict(p._terms)
    for code, c in q._terms.items():
        out[code] = out.get(code, Fraction(0)) + c
    return Polynomial(p.alphabet, out)


def scale(c: Scalar, p: Polynomial) -> Polynomial:
    c = Fraction(c)
    if c == 0:
        return Polynomial.zero(p.alphabet)
    if c == 1:
        return p
    return Polynomial(p.alphabet, {code: c * v for code, v in p._terms.items()})


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Bilinear extension of grafting."""
    _check_same_alphabet(p, q)
    if p.is_zero() or q.is_zero():
        return Polynomial.zero(p.alphabet)
    out: Dict[MonomialCode, Fraction] = {}
    for c1, a in p._terms.items():
        for c2, b in q._terms.items():
            code = graft(c1, c2)
            out[code] = out.get(code, Fraction(0)) + a * b
    return Polynomial(p.alphabet, out)


def linear_combination(alphabet: Alphabet, pairs: Iterable[Tuple[Scalar, Polynomial]]) -> Polynomial:
    out: Dict[MonomialCode, Fraction] = {}
    for c, p in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        for code, v in p._terms.items():
            out[code] = out.get(code, Fraction(0)) + c * v
    return Polynomial(alphabet, out)


# -----------------------------------------------------------
# Grading
# -----------------------------------------------------------
def pi_n(p: Polynomial, n: int) -> Polynomial:
    return Polynomial(p.alphabet, {code: c for code, c in p._terms.items() if code.degree == n})


def homogeneous_components(p: Polynomial) -> Dict[int, Polynomial]:
    buckets: Dict[int, Dict[MonomialCode, Fraction]] = {}
    for code, c in p._terms.items():
        buckets.setdefault(code.degree, {})[code] = c
    return {d: Polynomial(p.alphabet, terms) for d, terms in sorted(buckets.items())}


def is_homogeneous(p: Polynomial) -> bool:
    return p.is_homogeneous()


def leading_form(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no leading form")
    return pi_n(p, p.degree)


def product_type_split(p: Polynomial, n: int) -> Dict[Shape, Polynomial]:
    buckets: Dict[Shape, Dict[MonomialCode, Fraction]] = {}
    for code, c in p._terms.items():
        if code.degree == n:
            buckets.setdefault(code.shape, {})[code] = c
    return {shape: Polynomial(p.alphabet, terms) for shape, terms in sorted(buckets.items())}


# -----------------------------------------------------------
# Text form
# -----------------------------------------------------------
def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, (code, c) in enumerate(p._terms.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_code(code, p.alphabet)
        if mag != 1:
            body = f"{format_rational(mag)}*{body}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
