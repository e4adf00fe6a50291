import pytest
from hypothesis import given, settings, strategies as st

from gincurve import monomials as mono
from gincurve.ftable import FTable, f_table
from gincurve.ideals import minimalize
from gincurve.invariants import (MalformedInvariantsError, UndefinedInvariantError, check_connected,
                                 check_gruson_peskine, ci_pattern, ci_prefix_length, compute_mu,
                                 compute_s, invariant_table, lambda_invariants, shape_exponents)

from conftest import CONNECTED_EXAMPLE, mideal


@pytest.fixture
def example():
    return f_table(mideal(*CONNECTED_EXAMPLE))


def borel_ideals():
    gens = st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple).filter(any),
                    min_size=1, max_size=4)
    # x1^a and x2^b keep every s_k and mu_i(k) defined
    return st.tuples(gens, st.integers(1, 5), st.integers(1, 6)).map(
        lambda t: minimalize(mono.borel_closure(t[0] + [(t[1], 0, 0), (0, t[2], 0)]), 3))


def test_s_examples(example, load):
    assert compute_s(example, 0) == 4
    assert compute_s(example, 1) == 3
    assert compute_s(f_table(load("disconnected")), 2) == 3


def test_s_undefined():
    with pytest.raises(UndefinedInvariantError):
        compute_s(f_table(mideal("x2^2", "x1*x2")), 3)


def test_mu_examples(example, load):
    assert compute_mu(example, 0) == [5, 3, 2, 1]
    assert compute_mu(example, 1) == [4, 3, 1]
    assert compute_mu(example, 2) == [4, 3, 1]
    for k in range(3, 9):
        assert compute_mu(example, k) == [4, 2, 1]
    assert compute_mu(f_table(load("disconnected")), 2) == [5, 2, 1]


def test_lambda_examples(example, load):
    assert lambda_invariants(example) == ([4, 2, 1], 3)
    assert lambda_invariants(f_table(load("ci-tail"))) == ([6, 5, 3, 1], 0)
    cone = f_table(mideal("x1^2", "x1*x2", "x2^3"))
    assert lambda_invariants(cone) == ([3, 1], 0)


def test_invariant_table_json_order(example):
    data = invariant_table(example).to_json()
    assert list(data) == ["s", "mu", "lambda", "stabilization"]
    assert list(data["mu"]) == ["0", "1", "2", "3"]
    assert data["lambda"] == [4, 2, 1] and data["stabilization"] == 3


def test_undefined_levels_are_skipped():
    t = f_table(mideal("x1^2*x3^2", "x1*x2", "x2^2"))
    table = invariant_table(t)
    assert table.first_defined == 2
    assert list(table.mu) == [2]


def test_connected_examples(example, load):
    assert check_connected(example).passed
    report = check_connected(f_table(load("disconnected")))
    assert not report.passed
    assert {"kind": "gap", "k": 2, "i": 0, "mu_i": 5, "mu_next": 2} in report.violations
    assert check_connected(f_table(load("strano-obstructed"))).passed


def test_tail_condition():
    # s_1 = 1 < s_0 = 3 while mu_0(1) = 3 > 2
    t = FTable.from_rows([["o"], [1, "o"], ["o", "o", "o"], ["X", "X", "X", "X"]])
    report = check_connected(t)
    assert {"kind": "tail", "k": 1, "i": 0, "mu_i": 3} in report.violations


def test_gruson_peskine_examples():
    assert check_gruson_peskine((4, 2, 1)) == (True, None)
    assert check_gruson_peskine((5, 2, 1)) == (False, 0)
    assert check_gruson_peskine((2, 1)) == (True, None)
    with pytest.raises(MalformedInvariantsError):
        check_gruson_peskine((2, 2))


def test_ci_pattern_examples():
    assert ci_pattern((4, 2)) == (2, 3)
    assert ci_pattern((3, 1)) == (2, 2)
    assert ci_pattern((4, 2, 1)) is None


def test_ci_prefix_examples():
    assert ci_prefix_length((6, 5, 3, 1)) == 3
    assert ci_prefix_length((4, 2)) == 2
    assert ci_prefix_length((5, 3, 1)) == 3


@given(st.integers(1, 8), st.integers(1, 6))
def test_ci_pattern_degree(k, top):
    lam = tuple(top + 2 * (k - 1) - 2 * i for i in range(k))
    kk, n = ci_pattern(lam)
    assert kk == k and kk * n == sum(lam)


@settings(max_examples=80, deadline=None)
@given(borel_ideals())
def test_mu_strictly_decreasing_and_monotone(ideal):
    t = f_table(ideal)
    table = invariant_table(t)
    for k, mus in table.mu.items():
        assert all(a > b for a, b in zip(mus, mus[1:]))
        if k + 1 in table.mu:
            nxt = table.mu[k + 1]
            assert table.s[k + 1] <= table.s[k]
            assert all(nxt[i] <= mus[i] for i in range(len(nxt)))


@settings(max_examples=80, deadline=None)
@given(borel_ideals())
def test_lambda_is_saturation_shape(ideal):
    t = f_table(ideal)
    lam, _ = lambda_invariants(t)
    assert lam == shape_exponents(t)
    assert lam == lambda_invariants(f_table(ideal.saturate_last_var()))[0]
    top = ideal.max_degree + sum(lam) + 2
    assert sum(lam) == ideal.hilbert_function(top)


def test_example_hilbert_limit(example):
    assert sum(lambda_invariants(example)[0]) == 7 == mideal(*CONNECTED_EXAMPLE).hilbert_function(9)
