from math import comb

import pytest

from gincurve.fixtures import GENERIC_POINTS_LAMBDA, corpus, fixture, staircase
from gincurve.ftable import f_table
from gincurve.generic import apply_change, gin, random_coordinate_change
from gincurve.ideals import MonomialIdeal
from gincurve.invariants import ci_pattern, lambda_invariants
from gincurve.oracles import truncated_initial_ideal
from gincurve.rules import admissibility, sporadic_zeros

CURVES = ["twisted-cubic", "rational-quartic", "ci-2-2", "ci-2-3"]


def generic_lambda(n):
    """lambda_i = #{d >= i : dh(d) > i} for h(d) = min(n, binom(d + 2, 2))."""
    h = [min(n, comb(d + 2, 2)) for d in range(n + 2)]
    dh = [h[0]] + [b - a for a, b in zip(h, h[1:])]
    lam = []
    i = 0
    while True:
        v = sum(1 for d in range(i, len(dh)) if dh[d] > i)
        if not v:
            return tuple(lam)
        lam.append(v)
        i += 1


def test_corpus_contents():
    names = [f.name for f in corpus()]
    for name in CURVES + [f"points-{n}" for n in range(3, 11)]:
        assert name in names
    assert all(f.notes for f in corpus())
    with pytest.raises(KeyError):
        fixture("nope")


@pytest.mark.parametrize("n", range(3, 11))
def test_generic_points_lambda_table(n):
    assert GENERIC_POINTS_LAMBDA[n] == generic_lambda(n)
    assert sum(GENERIC_POINTS_LAMBDA[n]) == n


def test_staircase():
    assert staircase((2, 1)) == ("x1^2", "x1*x2", "x2^2")
    assert staircase((4, 2, 1)) == ("x1^3", "x1^2*x2", "x1*x2^2", "x2^4")


@pytest.mark.parametrize("name", CURVES + [f"points-{n}" for n in range(3, 11)])
def test_expected_gin(name):
    fx = fixture(name)
    ideal = fx.ideal()
    report = gin(ideal, trials=3, seed=0)
    expected = MonomialIdeal.parse(fx.expected_gin, ideal.num_vars)
    assert report.result == expected
    assert report.agreements == 3 and report.borel_fixed
    moved = apply_change(ideal, random_coordinate_change(report.seeds[0], ideal.num_vars, ideal.ring.p))
    assert report.result == truncated_initial_ideal(moved, expected.max_degree + 1)
    g3 = report.result if report.result.num_vars == 3 else report.result.restrict_drop_last_var()
    t = f_table(g3)
    assert tuple(lambda_invariants(t)[0]) == fx.expected_lambda
    assert not admissibility(t).failing


def test_complete_intersections():
    for name, kind in [("ci-2-2", (2, 2)), ("ci-2-3", (2, 3))]:
        fx = fixture(name)
        assert ci_pattern(fx.expected_lambda) == kind
        g = MonomialIdeal.parse(fx.expected_gin, 4).restrict_drop_last_var()
        assert sporadic_zeros(f_table(g)) == []


def test_diagram_lambdas():
    for fx in corpus():
        if fx.kind == "diagram":
            assert tuple(lambda_invariants(f_table(fx.ideal()))[0]) == fx.expected_lambda
