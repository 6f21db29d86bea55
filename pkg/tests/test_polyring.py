import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials
from qhpoly.errata import parse_poly as P
from qhpoly.errors import ExponentUnderflow, NotUnivariate
from qhpoly.polyring import (
    ONE, Q, T, U, ZERO, Polynomial, add, evaluate, format_poly,
    is_palindromic_in_t, mul, reverse_transform, specialize,
)


def test_add_examples():
    assert add(P("1 + t*q"), P("t*q")) == P("1 + 2*t*q")
    p = P("1 + 2*t*q + t*q^2")
    assert add(p, ZERO) == p
    total = add(P("t*q^2"), P("-t*q^2"))
    assert total.is_zero() and total.terms == {}


def test_mul_examples():
    assert mul(1 + T, 1 + T) == P("1 + 2*t + t^2")
    assert mul(P("1 + t + t^2"), ONE) == P("1 + t + t^2")
    assert mul(P("1 + t*q"), P("1 + t*q^2")) == P("1 + t*q + t*q^2 + t^2*q^3")


def test_specialize_examples():
    assert specialize(P("1 + 2*t*q + t*q^2 + t^2*q^3"), "q") == P("1 + 3*t + t^2")
    p = P("1 + t*q")
    assert specialize(p, "u") == p
    assert specialize(P("u + t*q*u"), "u") == P("1 + t*q")


def test_reverse_transform_examples():
    assert reverse_transform(P("u + t*q*u"), 1) == P("u + t*q*u")
    assert reverse_transform(ONE, 0) == ONE
    with pytest.raises(ExponentUnderflow):
        reverse_transform(P("t*q^2"), 1)


def test_palindromic_examples():
    assert is_palindromic_in_t(P("1 + 4*t + t^2"), 2)
    assert is_palindromic_in_t(1 + T, 1)
    assert not is_palindromic_in_t(P("1 + 2*t"), 1)
    with pytest.raises(NotUnivariate):
        is_palindromic_in_t(P("1 + t*q"), 1)


def test_evaluate_examples():
    assert evaluate(P("1 + 2*t*q + t*q^2 + t^2*q^3"), 1, 1, 1) == 5
    assert evaluate(ZERO, 3, -2, 7) == 0
    assert evaluate(P("1 + 3*t + t^2")) == 5


def test_format_styles():
    assert format_poly(P("1 + t*q"), "plain") == "1 + t*q"
    assert format_poly(ZERO, "plain") == "0"
    assert format_poly(T**2 * Q**3, "latex") == "t^{2}q^{3}"
    assert format_poly(P("1 - 2*t"), "plain") == "1 - 2*t"
    assert format_poly(P("1 + t*q"), "csv") == "t,q,u,coeff\n0,0,0,1\n1,1,0,1"
    obj = json.loads(format_poly(P("1 + t*q"), "json"))
    assert obj == {"terms": [{"t": 0, "q": 0, "u": 0, "coeff": 1},
                             {"t": 1, "q": 1, "u": 0, "coeff": 1}]}
    with pytest.raises(ValueError):
        format_poly(ONE, "html")


def test_terms_canonical_and_sparse():
    p = Polynomial({(2, 0, 0): 1, (0, 0, 0): 3, (1, 5, 0): 0})
    assert list(p.terms) == [(0, 0, 0), (2, 0, 0)]
    assert Polynomial({(1, 0, 0): 1}) == T and hash(Polynomial({(1, 0, 0): 1})) == hash(T)


@given(polynomials, polynomials, polynomials)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert (a - a).is_zero()


@given(polynomials, polynomials, st.sampled_from("tqu"))
def test_specialize_is_a_ring_map(a, b, var):
    assert specialize(a + b, var) == specialize(a, var) + specialize(b, var)
    assert specialize(a * b, var) == specialize(a, var) * specialize(b, var)
    assert evaluate(specialize(a, var)) == evaluate(a)


@given(polynomials, polynomials, st.integers(0, 4), st.integers(-2, 2), st.integers(-2, 2))
def test_evaluate_is_a_ring_map(a, b, t0, q0, u0):
    assert evaluate(a + b, t0, q0, u0) == evaluate(a, t0, q0, u0) + evaluate(b, t0, q0, u0)
    assert evaluate(a * b, t0, q0, u0) == evaluate(a, t0, q0, u0) * evaluate(b, t0, q0, u0)


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 4), st.integers(4, 8)),
                       st.integers(-3, 3), max_size=5).map(Polynomial))
def test_reverse_transform_is_an_involution(p):
    d = 3
    assert reverse_transform(reverse_transform(p, d), d) == p


@given(polynomials)
def test_round_trips(p):
    assert P(format_poly(p, "plain")) == p
    assert Polynomial.from_json_obj(json.loads(format_poly(p, "json"))) == p
