import pytest

from gincurve.fileformat import parse_ideal
from gincurve.fixtures import by_name
from gincurve.ideals import MonomialIdeal


def mideal(*gens, n=3):
    return MonomialIdeal.parse(gens, n)


CONNECTED_EXAMPLE = ("x1^3*x3", "x1^2*x2*x3", "x1*x2^2*x3^3", "x1^4", "x1^3*x2",
                     "x1^2*x2^2", "x1*x2^3", "x2^4*x3", "x2^5")


@pytest.fixture(scope="session")
def corpus():
    return by_name()


@pytest.fixture(scope="session")
def load(corpus):
    def _load(name):
        return parse_ideal(corpus[name].source)
    return _load
