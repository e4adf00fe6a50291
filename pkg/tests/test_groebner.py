import pytest

from gincurve.groebner import buchberger, initial_ideal, is_groebner_basis, normal_form
from gincurve.ideals import MonomialIdeal
from gincurve.oracles import quotient_hilbert_function, truncated_initial_ideal
from gincurve.polynomials import PolynomialIdeal, Ring, format_polynomial

R3 = Ring(3)
R4 = Ring(4)
TWISTED_CUBIC = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]


def ideal(ring, *lines):
    return PolynomialIdeal.from_strings(lines, ring)


def test_normal_form_examples():
    g = R3.parse("x1^2 - x2*x3")
    assert normal_form(R3.parse("x1^2"), [g]) == R3.parse("x2*x3")
    assert not normal_form(g, [g])
    assert normal_form(R3.parse("x3^2"), [R3.parse("x1 - x2")]) == R3.parse("x3^2")


def test_normal_form_rejects_zero_divisor():
    with pytest.raises(ValueError):
        normal_form(R3.parse("x1"), [R3.zero()])


def test_buchberger_examples():
    assert [format_polynomial(g) for g in buchberger(ideal(R3, "x1", "x2"))] == ["x2", "x1"]
    gb = buchberger(ideal(R3, "x1 - x2", "x2 - x3"))
    assert sorted(format_polynomial(g) for g in gb) == ["x1 - x3", "x2 - x3"]
    assert buchberger(PolynomialIdeal(R3, ())) == []


def test_twisted_cubic_basis_against_linear_algebra():
    tc = ideal(R4, *TWISTED_CUBIC)
    gb = buchberger(tc)
    assert is_groebner_basis(gb)
    assert all(not normal_form(g, gb) for g in tc.gens)
    assert initial_ideal(tc) == truncated_initial_ideal(tc, 5)


def test_reduced_basis_is_monic_and_autoreduced():
    gb = buchberger(ideal(R4, "3*x1^2 + x2*x3 - x4^2", "x1*x2 - 5*x3^2", "x2^3 - x4^3"))
    leads = [g.lead for g in gb]
    for g in gb:
        assert g.lead_coeff == 1
        for m in g.terms:
            for lead in leads:
                if lead != g.lead:
                    assert not all(a <= b for a, b in zip(lead, m))


def test_initial_ideal_examples():
    assert initial_ideal(ideal(R3, "x1^2 - x2*x3")) == MonomialIdeal.parse(["x1^2"], 3)
    assert initial_ideal(ideal(R3, "x1 - x2", "x2 - x3")) == MonomialIdeal.parse(["x1", "x2"], 3)


def test_random_ideal_against_oracles():
    i = ideal(R4, "x1^2 + 7*x2*x3 - x4^2 + x1*x4", "x1*x2 - 5*x3^2 + x2*x4",
              "x2^3 - x4^3 + 11*x1*x3*x4")
    init = initial_ideal(i)
    assert init == truncated_initial_ideal(i, init.max_degree + 1)
    for d in range(7):
        assert init.hilbert_function(d) == quotient_hilbert_function(i, d)
