import json
from fractions import Fraction

import pytest
from hypothesis import given

from Cli.parsing import (
    indeterminate_count,
    parse_poly,
    parse_polynomials,
    parse_shape,
    parse_term,
    parse_word,
    polynomial_from_json,
    polynomial_to_json,
    polynomial_to_schema,
    read_polynomials,
)
from Engine.algebra.polynomial import Polynomial
from Engine.magma.terms import Alphabet, Leaf, Node, Shape, Word, format_term
from Engine.utils.errors import ParseError, UnknownSymbolError
from tests.strategies import polynomials, terms

Z2 = Alphabet.of("z1", "z2")
Z4 = Alphabet.of("z1", "z2", "z3", "z4")


# -----------------------------------------------------------
# Text forms
# -----------------------------------------------------------
def test_parse_term(Z3):
    assert parse_term("z2", Z3) == Leaf(1)
    assert parse_term(" ( z1 , (z2,z3) ) ", Z3) == Node(Leaf(0), Node(Leaf(1), Leaf(2)))


@pytest.mark.parametrize(
    "text, position",
    [("(z1,z2", 6), ("(z1;z2)", 3), ("", 0), ("(z1,z2))", 7)],
)
def test_term_errors_report_position(Z3, text, position):
    with pytest.raises(ParseError) as info:
        parse_term(text, Z3)
    assert info.value.position == position


def test_unknown_symbol(Z3):
    with pytest.raises(UnknownSymbolError) as info:
        parse_term("(z1,z9)", Z3)
    assert info.value.position == 4
    assert info.value.symbol == "z9"
    assert info.value.exit_code == 2


def test_parse_poly(Z4):
    p = parse_poly("4*(z3,(z1,z1)) + z2 + 3*z3", Z4)
    assert len(p) == 3
    assert p.coefficient(parse_poly("(z3,(z1,z1))", Z4).monomials()[0]) == 4
    q = parse_poly("-1/2*z1 - (z1,z2) + z1", Z4)
    assert q == parse_poly("1/2*z1 - (z1,z2)", Z4)
    assert parse_poly("0", Z4) == Polynomial.zero(Z4)
    assert parse_poly("z1 - z1", Z4).is_zero()


@pytest.mark.parametrize("text", ["z1 +", "2 z1", "1/0*z1", "z1 + + z2", "*z1", "   "])
def test_poly_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, Z2)


def test_parse_word_and_shape(Z3):
    assert parse_word("z2.z3.z1", Z3) == Word((1, 2, 0))
    assert parse_shape("10100") == Shape("10100")
    with pytest.raises(ParseError):
        parse_word("z1..z2", Z3)
    with pytest.raises(UnknownSymbolError):
        parse_word("z1.z7", Z3)
    with pytest.raises(ParseError):
        parse_shape("10")


@given(terms(Z4))
def test_term_text_round_trip(t):
    assert parse_term(format_term(t, Z4), Z4) == t


@given(polynomials(Z2, 4, 5))
def test_poly_text_round_trip(p):
    assert parse_poly(str(p), Z2) == p


# -----------------------------------------------------------
# JSON forms
# -----------------------------------------------------------
def test_json_form_of_a_term(Z4):
    schema = polynomial_to_schema(parse_poly("4*(z3,(z1,z1))", Z4))
    assert schema.alphabet == ["z1", "z2", "z3", "z4"]
    entry = schema.terms[0]
    assert entry.shape == "10100"
    assert entry.word == ["z3", "z1", "z1"]
    assert entry.coeff == "4/1"


def test_json_input():
    data = {"alphabet": ["z1", "z2"], "terms": [{"shape": "100", "word": ["z1", "z2"], "coeff": "4/1"}]}
    p = polynomial_from_json(data)
    assert p == parse_poly("4*(z1,z2)", Z2)
    assert polynomial_from_json(json.dumps(data)) == p


def test_json_round_trip_keeps_fractions():
    p = parse_poly("-1/3*z1 + 5/2*((z1,z2),z2)", Z2)
    assert polynomial_from_json(polynomial_to_json(p)) == p
    assert json.loads(polynomial_to_json(p))["terms"][0]["coeff"] == "-1/3"


@pytest.mark.parametrize(
    "terms_, error",
    [
        ([{"shape": "10", "word": ["z1"], "coeff": "1"}], ParseError),
        ([{"shape": "100", "word": ["z1"], "coeff": "1"}], ParseError),
        ([{"shape": "0", "word": ["z5"], "coeff": "1"}], UnknownSymbolError),
        ([{"shape": "0", "word": ["z1"], "coeff": "one"}], ParseError),
        ([{"shape": "0", "word": ["z1"]}], ParseError),
    ],
)
def test_json_errors(terms_, error):
    with pytest.raises(error):
        polynomial_from_json({"alphabet": ["z1", "z2"], "terms": terms_})


# -----------------------------------------------------------
# Input files
# -----------------------------------------------------------
def test_parse_lines_with_comments():
    text = "# generators\nz1 + z2\n\n(z1,z1) - 1/2*z2   # tail\n"
    ps = parse_polynomials(text, Z2)
    assert ps == [parse_poly("z1 + z2", Z2), parse_poly("(z1,z1) - 1/2*z2", Z2)]


def test_parse_json_array():
    p = parse_poly("(z1,z2) + 2*z2", Z2)
    text = json.dumps([json.loads(polynomial_to_json(p))])
    assert parse_polynomials(text, Z2) == [p]
    with pytest.raises(ParseError):
        parse_polynomials("[{", Z2)


def test_line_number_in_errors():
    with pytest.raises(ParseError) as info:
        parse_polynomials("z1\n(z1,\n", Z2)
    assert info.value.reason.startswith("line 2:")
    assert info.value.position == 4


def test_read_polynomials(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("z1\n(z2,z2)\n", encoding="utf-8")
    assert read_polynomials(path, Z2) == [parse_poly("z1", Z2), parse_poly("(z2,z2)", Z2)]
    assert read_polynomials(path, Z2)[1].coefficient(parse_poly("(z2,z2)", Z2).monomials()[0]) == Fraction(1)


def test_read_polynomials_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_bytes(b"z1\n(z1,\xff)\n")
    with pytest.raises(ParseError) as info:
        read_polynomials(path, Z2)
    assert info.value.position == 7
    assert info.value.exit_code == 2


def test_indeterminate_count():
    assert indeterminate_count("(X1,X3) - 2*X2") == 3
    assert indeterminate_count("z1 + X10") == 10
    assert indeterminate_count("(X0,Xa)") == 0
