# Engine/magma/terms.py
"""
Magma terms and their (product type, sequence type) codes.

A term is a planar binary tree with alphabet-labelled leaves. `embed` sends it
to a `MonomialCode`: the bare tree shape as a preorder bitstring
(1 = internal node, 0 = leaf) together with the leaf word read left to right.
The map is an injective magma morphism, so codes are used as the monomial keys
everywhere else in the engine.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterator, Sequence, Tuple, Union

from Engine.utils.errors import (
    ArityError,
    DegreeMismatchError,
    HypothesisViolationError,
    UnknownSymbolError,
)

SYMBOL_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


# -----------------------------------------------------------
# Alphabet
# -----------------------------------------------------------
@dataclass(frozen=True)
class Alphabet:
    symbols: Tuple[str, ...]

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise HypothesisViolationError("an alphabet needs at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise HypothesisViolationError(f"alphabet symbols must be distinct: {list(symbols)}")
        for s in symbols:
            if not SYMBOL_PATTERN.match(s):
                raise HypothesisViolationError(f"invalid symbol name {s!r}")

    @classmethod
    def of(cls, *symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    @classmethod
    def indeterminates(cls, n: int, prefix: str = "X") -> "Alphabet":
        """The alphabet X1..Xn used for polynomial expressions in n variables."""
        if n < 1:
            raise ArityError("need at least one indeterminate")
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise UnknownSymbolError(symbol) from None

    def symbol(self, index: int) -> str:
        return self.symbols[index]


# -----------------------------------------------------------
# Terms
# -----------------------------------------------------------
@dataclass(frozen=True)
class Leaf:
    symbol: int

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    left: "MagmaTerm"
    right: "MagmaTerm"
    degree: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", self.left.degree + self.right.degree)


MagmaTerm = Union[Leaf, Node]


def degree(t: MagmaTerm) -> int:
    return t.degree


# -----------------------------------------------------------
# Product type / sequence type
# -----------------------------------------------------------
def _is_full_preorder(bits: str) -> bool:
    need = 1
    for ch in bits:
        if need == 0:
            return False
        if ch == "1":
            need += 1
        elif ch == "0":
            need -= 1
        else:
            return False
    return need == 0


@dataclass(frozen=True, order=True)
class Shape:
    bits: str

    def __post_init__(self) -> None:
        if not _is_full_preorder(self.bits):
            raise HypothesisViolationError(f"{self.bits!r} is not a preorder full binary tree encoding")

    @property
    def degree(self) -> int:
        return self.bits.count("0")

    def __str__(self) -> str:
        return self.bits


LEAF_SHAPE = Shape("0")


@dataclass(frozen=True, order=True)
class Word:
    seq: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(self.seq))
        if not self.seq:
            raise HypothesisViolationError("words are nonempty")

    @property
    def degree(self) -> int:
        return len(self.seq)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.seq + other.seq)


@total_ordering
@dataclass(frozen=True, eq=True)
class MonomialCode:
    shape: Shape
    word: Word

    def __post_init__(self) -> None:
        if self.shape.degree != self.word.degree:
            raise DegreeMismatchError(
                f"shape {self.shape.bits} has degree {self.shape.degree} "
                f"but the word has length {self.word.degree}"
            )

    @property
    def degree(self) -> int:
        return self.word.degree

    def sort_key(self) -> Tuple[int, str, Tuple[int, ...]]:
        """Canonical order: degree, then shape bits, then word."""
        return (len(self.word.seq), self.shape.bits, self.word.seq)

    def __lt__(self, other: "MonomialCode") -> bool:
        if not isinstance(other, MonomialCode):
            return NotImplemented
        return self.sort_key() < other.sort_key()


def leaf_code(symbol: int) -> MonomialCode:
    return MonomialCode(LEAF_SHAPE, Word((symbol,)))


def product_type(t: MagmaTerm) -> Shape:
    return embed(t).shape


def sequence_type(t: MagmaTerm) -> Word:
    return embed(t).word


# -----------------------------------------------------------
# Embedding
# -----------------------------------------------------------
def graft(c1: MonomialCode, c2: MonomialCode) -> MonomialCode:
    return MonomialCode(Shape("1" + c1.shape.bits + c2.shape.bits), c1.word + c2.word)


def ungraft(code: MonomialCode) -> Tuple[MonomialCode, MonomialCode]:
    """Split a code of degree >= 2 into the codes of its two factors."""
    bits = code.shape.bits
    if len(bits) < 3:
        raise DegreeMismatchError("a degree-1 code has no factors")
    need, i = 1, 1
    while need:
        need += 1 if bits[i] == "1" else -1
        i += 1
    left_bits = bits[1:i]
    left_degree = left_bits.count("0")
    seq = code.word.seq
    return (
        MonomialCode(Shape(left_bits), Word(seq[:left_degree])),
        MonomialCode(Shape(bits[i:]), Word(seq[left_degree:])),
    )


def embed(t: MagmaTerm) -> MonomialCode:
    if isinstance(t, Leaf):
        return leaf_code(t.symbol)
    return graft(embed(t.left), embed(t.right))


def unembed(c: MonomialCode) -> MagmaTerm:
    if c.shape.degree != c.word.degree:
        raise DegreeMismatchError("shape and word degrees differ")
    bits, seq = c.shape.bits, c.word.seq
    pos = 0
    letter = 0

    def build() -> MagmaTerm:
        nonlocal pos, letter
        bit = bits[pos]
        pos += 1
        if bit == "0":
            leaf = Leaf(seq[letter])
            letter += 1
            return leaf
        left = build()
        right = build()
        return Node(left, right)

    return build()


def substitute_term(t: MagmaTerm, args: Sequence[MagmaTerm]) -> MagmaTerm:
    """Replace every leaf X_i of `t` by args[i]."""
    if isinstance(t, Leaf):
        if t.symbol >= len(args):
            raise ArityError(f"indeterminate X{t.symbol + 1} has no argument ({len(args)} given)")
        return args[t.symbol]
    return Node(substitute_term(t.left, args), substitute_term(t.right, args))


# -----------------------------------------------------------
# Text forms
# -----------------------------------------------------------
def format_term(t: MagmaTerm, alphabet: Alphabet) -> str:
    if isinstance(t, Leaf):
        return alphabet.symbol(t.symbol)
    return f"({format_term(t.left, alphabet)},{format_term(t.right, alphabet)})"


def format_word(w: Word, alphabet: Alphabet) -> str:
    return ".".join(alphabet.symbol(i) for i in w.seq)


def format_code(c: MonomialCode, alphabet: Alphabet) -> str:
    return format_term(unembed(c), alphabet)

