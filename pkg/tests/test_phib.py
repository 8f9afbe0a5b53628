import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from carrychain.errors import DomainError
from carrychain.exact import Polynomial
from carrychain.phib import (ClassAFunction, convergence_trace, phi_b_iterate, phi_b_limit,
                             phi_b_matrix, phi_b_oracle, taylor_prefix)

from oracles import phi_by_series, series_by_division

F = Fraction


def fn(coeffs, n):
    return ClassAFunction(Polynomial(coeffs), n)


@st.composite
def class_a(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    h = draw(st.lists(st.fractions(-20, 20, max_denominator=12),
                      min_size=n - 1, max_size=n - 1))
    return ClassAFunction(Polynomial(h), n)


def test_class_membership():
    fn([1, 2], 3)
    with pytest.raises(DomainError):
        fn([1, 2, 3], 3)
    with pytest.raises(DomainError):
        fn([1], 1)
    # the explicit zero function may have a small pole order
    assert fn([], 0).numerator.is_zero()
    assert fn([0, 0], 1).numerator.is_zero()


@pytest.mark.parametrize("h, n, length, expected", [
    ([1], 2, 4, [1, 2, 3, 4]),
    ([1], 3, 4, [1, 3, 6, 10]),
    ([3, 1], 3, 3, [3, 10, 21]),
    ([1], 2, 0, []),
])
def test_taylor_prefix(h, n, length, expected):
    assert list(taylor_prefix(fn(h, n), length).coefficients) == expected


@given(class_a())
def test_taylor_prefix_matches_prefix_sums(f):
    got = taylor_prefix(f, 12).coefficients
    assert list(got) == series_by_division(list(f.numerator), f.pole_order, 12)


@pytest.mark.parametrize("h, n, b, expected", [
    ([1], 2, 2, [2]),
    ([1], 3, 2, [3, 1]),
    ([1], 2, 3, [3]),
])
def test_phi_examples(h, n, b, expected):
    f = fn(h, n)
    assert phi_by_series(h, n, b) == expected
    assert phi_b_oracle(f, b) == fn(expected, n)
    assert phi_b_matrix(f, b) == fn(expected, n)


def test_phi_matrix_on_cubic_pole():
    f = fn([1, 1], 4)
    assert phi_b_matrix(f, 2) == phi_b_oracle(f, 2)
    assert list(phi_b_oracle(f, 2).numerator) == phi_by_series([1, 1], 4, 2)


@given(class_a())
def test_base_one_is_identity(f):
    assert phi_b_oracle(f, 1) == f
    assert phi_b_matrix(f, 1) == f


@settings(max_examples=60)
@given(class_a(max_n=6), st.integers(1, 5))
def test_oracle_matches_independent_series(f, b):
    assert list(phi_b_oracle(f, b).numerator) == phi_by_series(list(f.numerator), f.pole_order, b)


@given(class_a(), st.integers(1, 5))
def test_routes_agree(f, b):
    assert phi_b_matrix(f, b) == phi_b_oracle(f, b)


@given(class_a(), st.integers(1, 5))
def test_stability_and_mass(f, b):
    g = phi_b_matrix(f, b)
    n = f.pole_order
    assert g.pole_order == n
    assert g.numerator.degree <= n - 2
    assert g.numerator(1) == b ** (n - 1) * f.numerator(1)


@given(class_a(max_n=5), st.fractions(max_denominator=9), st.fractions(max_denominator=9),
       st.integers(1, 4), st.data())
def test_linearity(f, alpha, beta, b, data):
    n = f.pole_order
    g = ClassAFunction(Polynomial(data.draw(st.lists(st.integers(-9, 9), min_size=n - 1,
                                                     max_size=n - 1))), n)
    lhs = phi_b_oracle(alpha * f + beta * g, b)
    rhs = alpha * phi_b_oracle(f, b) + beta * phi_b_oracle(g, b)
    assert lhs == rhs


def test_zero_function_passes_through():
    z = fn([], 3)
    assert phi_b_oracle(z, 3) == z and phi_b_matrix(z, 3) == z


def test_iterate_examples():
    f = fn([1], 3)
    assert phi_b_iterate(f, 2, 0) == f
    assert phi_b_iterate(f, 2, 2) == phi_b_matrix(f, 4)
    assert phi_b_iterate(fn([1], 2), 2, 5) == fn([32], 2)


@pytest.mark.parametrize("b", [2, 3])
@pytest.mark.parametrize("n", range(2, 7))
def test_iteration_law(b, n):
    rng = random.Random(1000 * b + n)
    for _ in range(3):
        f = fn([rng.randint(-9, 9) for _ in range(n - 1)], n)
        for r in range(5):
            assert phi_b_iterate(f, b, r) == phi_b_matrix(f, b ** r)


def test_limit_examples():
    assert phi_b_limit(fn([1], 3)) == fn([F(1, 2), F(1, 2)], 3)
    assert phi_b_limit(fn([-1, 1], 3)).numerator.is_zero()
    assert phi_b_limit(fn([1], 4)) == fn([F(1, 6), F(4, 6), F(1, 6)], 4)
    assert phi_b_limit(fn([2, 5, 1], 5)).numerator(1) == 8


def test_convergence_trace_examples():
    assert convergence_trace(fn([1], 2), 2, 3) == [0, 0, 0]
    d = convergence_trace(fn([1], 3), 2, 2)
    assert d == [F(1, 4), F(1, 8)]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_convergence_decays(n):
    d = convergence_trace(fn([1], n), 2, 15)
    assert all(d[r] <= d[r - 1] for r in range(2, 15))
    assert d[14] / d[4] <= F(1, 100)


def test_convergence_trace_rejections():
    with pytest.raises(DomainError):
        convergence_trace(fn([1, -1], 3), 2, 3)
    with pytest.raises(DomainError):
        convergence_trace(fn([1], 3), 1, 3)
    with pytest.raises(DomainError):
        convergence_trace(fn([1], 3), 2, 0)


def test_json_round_trip():
    f = fn([F(1, 2), -3], 4)
    assert f.to_json() == '{"numerator":["1/2","-3"],"pole_order":4}'
    assert ClassAFunction.from_json(f.to_json()) == f
