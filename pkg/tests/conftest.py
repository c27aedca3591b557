import pytest

from Cli.parsing import parse_poly
from Engine.magma.terms import Alphabet


@pytest.fixture
def Z1():
    return Alphabet.of("z1")


@pytest.fixture
def Z2():
    return Alphabet.of("z1", "z2")


@pytest.fixture
def Z3():
    return Alphabet.of("z1", "z2", "z3")


@pytest.fixture
def Z4():
    return Alphabet.of("z1", "z2", "z3", "z4")


@pytest.fixture
def poly():
    """poly(text, alphabet) shorthand for parse_poly."""
    return lambda text, alphabet: parse_poly(text, alphabet)


@pytest.fixture
def X():
    """X(n): the indeterminate alphabet X1..Xn."""
    return Alphabet.indeterminates
