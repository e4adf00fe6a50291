import pytest

from gincurve.fileformat import format_ideal, parse_ideal
from gincurve.ideals import MonomialIdeal
from gincurve.monomials import ExponentOverflowError
from gincurve.polynomials import NonHomogeneousError, ParseError, PolynomialIdeal

TWISTED = """# twisted cubic
vars: x1 x2 x3 x4
x1*x3 - x2^2
x1*x4 - x2*x3   # second minor
x2*x4 - x3^2
"""


def test_polynomial_file():
    ideal = parse_ideal(TWISTED)
    assert isinstance(ideal, PolynomialIdeal)
    assert len(ideal.gens) == 3 and ideal.ring.p == 32003


def test_monomial_file(corpus):
    ideal = parse_ideal(corpus["connected-example"].source)
    assert isinstance(ideal, MonomialIdeal)
    assert len(ideal) == 9


def test_named_monomial_section():
    ideal = parse_ideal("vars: x1 x2 x3\nmonomials:\nx1^2\nx2*x3\n")
    assert isinstance(ideal, MonomialIdeal) and len(ideal) == 2


def test_prime_header_and_override():
    text = "vars: x y z\nprime: 101\nx^2 - 200*y*z\n"
    ideal = parse_ideal(text)
    assert ideal.ring.p == 101 and ideal.ring.names == ("x", "y", "z")
    assert ideal.gens[0].terms[(0, 1, 1)] == (-200) % 101
    assert parse_ideal(text, prime=7).ring.p == 7


@pytest.mark.parametrize("text, line, column", [
    ("vars: 3\nx1^\n", 2, 4),
    ("vars: x1 x2\n\nx1 + + x2\n", 3, 6),
    ("x1\n", 1, 1),
    ("vars: 3\n3*x1\n", 2, 1),
    ("vars: x1 x2\nprime: 12\nx1\n", 2, 8),
    ("vars: x1 x2\nprime: big\nx1\n", 2, 8),
])
def test_syntax_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_non_homogeneous():
    with pytest.raises(NonHomogeneousError, match="line 2"):
        parse_ideal("vars: x1 x2\nx1^2 + x2\n")


def test_exponent_overflow():
    with pytest.raises(ExponentOverflowError):
        parse_ideal("vars: 3\nx1^99999999999\n")


def test_round_trip_on_corpus(corpus):
    for fx in corpus.values():
        ideal = parse_ideal(fx.source)
        again = parse_ideal(format_ideal(ideal))
        assert again == ideal, fx.name
        assert format_ideal(again) == format_ideal(ideal)
