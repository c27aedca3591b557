# Cli/parsing.py
"""
Text and JSON forms of terms and polynomials.

    term       := symbol | "(" term "," term ")"
    poly       := "0" | signedterm (("+" | "-") signedterm)*
    signedterm := ["-"] [rational "*"] term        (leading sign on the first term only)
    rational   := int ["/" int]

Whitespace is insignificant. Printing then parsing is the identity on
canonical forms.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import TypeAdapter, ValidationError

from Cli.schemas import PolynomialSchema, TermEntrySchema
from Engine.algebra.polynomial import Polynomial, format_polynomial
from Engine.magma.terms import (
    Alphabet,
    Leaf,
    MagmaTerm,
    MonomialCode,
    Node,
    Shape,
    Word,
    embed,
)
from Engine.utils.errors import HypothesisViolationError, ParseError, UnknownSymbolError

_SYMBOL = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")
_COEFF = re.compile(r"\s*(-?[0-9]+)\s*(?:/\s*([0-9]+))?\s*\Z")


# -----------------------------------------------------------
# Recursive descent
# -----------------------------------------------------------
class _Reader:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, detail: str) -> ParseError:
        return ParseError(detail, self.pos, self.text)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.fail(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def finish(self) -> None:
        if self.peek():
            raise self.fail(f"unexpected {self.peek()!r}")

    def term(self) -> MagmaTerm:
        if self.peek() == "(":
            self.pos += 1
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return Node(left, right)
        m = _SYMBOL.match(self.text, self.pos)
        if not m:
            raise self.fail("expected a symbol or '('")
        try:
            index = self.alphabet.index(m.group())
        except UnknownSymbolError:
            raise UnknownSymbolError(m.group(), self.pos, self.text) from None
        self.pos = m.end()
        return Leaf(index)

    def rational(self) -> Optional[Fraction]:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        num = int(m.group())
        if self.peek() != "/":
            return Fraction(num)
        self.pos += 1
        self.skip()
        d = _INT.match(self.text, self.pos)
        if not d:
            raise self.fail("expected a denominator")
        if int(d.group()) == 0:
            raise self.fail("zero denominator")
        self.pos = d.end()
        return Fraction(num, int(d.group()))

    def signed_term(self, sign: int) -> Tuple[Fraction, MagmaTerm]:
        c = self.rational()
        if c is None:
            return Fraction(sign), self.term()
        self.expect("*")
        return sign * c, self.term()


def parse_term(text: str, alphabet: Alphabet) -> MagmaTerm:
    reader = _Reader(text, alphabet)
    t = reader.term()
    reader.finish()
    return t


def parse_poly(text: str, alphabet: Alphabet) -> Polynomial:
    reader = _Reader(text, alphabet)
    if text.strip() == "0":
        return Polynomial.zero(alphabet)
    if not reader.peek():
        raise reader.fail("empty polynomial")

    acc: Dict[MonomialCode, Fraction] = {}
    sign = 1
    if reader.peek() == "-":
        reader.pos += 1
        sign = -1
    while True:
        c, t = reader.signed_term(sign)
        code = embed(t)
        acc[code] = acc.get(code, Fraction(0)) + c
        ch = reader.peek()
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            break
        reader.pos += 1
    reader.finish()
    return Polynomial(alphabet, acc)


def format_poly(p: Polynomial) -> str:
    return format_polynomial(p)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    symbols = [s.strip() for s in text.split(".")]
    seq = []
    offset = 0
    for s in symbols:
        if not s:
            raise ParseError("empty symbol in word", offset, text)
        try:
            seq.append(alphabet.index(s))
        except UnknownSymbolError:
            raise UnknownSymbolError(s, offset, text) from None
        offset += len(s) + 1
    return Word(tuple(seq))


def parse_shape(text: str) -> Shape:
    try:
        return Shape(text.strip())
    except HypothesisViolationError as exc:
        raise ParseError(exc.detail, 0, text) from None


# -----------------------------------------------------------
# JSON
# -----------------------------------------------------------
def _format_coeff(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _parse_coeff(text: str) -> Fraction:
    m = _COEFF.match(text)
    if not m:
        raise ParseError(f"bad coefficient {text!r}", 0, text)
    den = int(m.group(2) or 1)
    if den == 0:
        raise ParseError("zero denominator", 0, text)
    return Fraction(int(m.group(1)), den)


def polynomial_to_schema(p: Polynomial) -> PolynomialSchema:
    symbols = list(p.alphabet.symbols)
    return PolynomialSchema(
        alphabet=symbols,
        terms=[
            TermEntrySchema(
                shape=code.shape.bits,
                word=[symbols[i] for i in code.word.seq],
                coeff=_format_coeff(c),
            )
            for code, c in p.items()
        ],
    )


def polynomial_to_json(p: Polynomial) -> str:
    return polynomial_to_schema(p).model_dump_json()


def polynomial_from_schema(schema: PolynomialSchema) -> Polynomial:
    try:
        alphabet = Alphabet(tuple(schema.alphabet))
    except HypothesisViolationError as exc:
        raise ParseError(exc.detail, 0) from None
    acc: Dict[MonomialCode, Fraction] = {}
    for entry in schema.terms:
        seq = []
        for s in entry.word:
            try:
                seq.append(alphabet.index(s))
            except UnknownSymbolError:
                raise UnknownSymbolError(s) from None
        try:
            code = MonomialCode(Shape(entry.shape), Word(tuple(seq)))
        except HypothesisViolationError as exc:
            raise ParseError(exc.detail, 0, entry.shape) from None
        acc[code] = acc.get(code, Fraction(0)) + _parse_coeff(entry.coeff)
    return Polynomial(alphabet, acc)


def polynomial_from_json(data: Union[str, Dict[str, Any]]) -> Polynomial:
    try:
        if isinstance(data, str):
            schema = PolynomialSchema.model_validate_json(data)
        else:
            schema = PolynomialSchema.model_validate(data)
    except ValidationError as exc:
        raise ParseError(f"invalid polynomial object: {exc.errors()[0]['msg']}", 0) from None
    return polynomial_from_schema(schema)


# -----------------------------------------------------------
# Input files
# -----------------------------------------------------------
_POLY_LIST = TypeAdapter(List[PolynomialSchema])


def parse_polynomials(text: str, alphabet: Alphabet) -> List[Polynomial]:
    """One polynomial per line (blank lines and '#' comments skipped), or a JSON array."""
    if text.lstrip().startswith("["):
        try:
            schemas = _POLY_LIST.validate_python(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, text) from None
        except ValidationError as exc:
            raise ParseError(f"invalid polynomial object: {exc.errors()[0]['msg']}", 0) from None
        return [polynomial_from_schema(s) for s in schemas]

    out: List[Polynomial] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            out.append(parse_poly(body, alphabet))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.reason}", exc.position, line) from None
    return out


def read_polynomials(path: Path, alphabet: Alphabet) -> List[Polynomial]:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("input is not valid UTF-8", exc.start, str(path)) from None
    return parse_polynomials(text, alphabet)


def indeterminate_count(text: str, prefix: str = "X") -> int:
    """Highest k such that `{prefix}k` occurs as a symbol in text, or 0."""
    pattern = re.compile(rf"{re.escape(prefix)}([1-9][0-9]*)")
    found = [int(m.group(1)) for m in map(pattern.fullmatch, _SYMBOL.findall(text)) if m]
    return max(found, default=0)
