import random
from fractions import Fraction

import pytest

from carrychain.carries import carries_matrix_holte
from carrychain.errors import DomainError
from carrychain.exact import Polynomial, RatMatrix
from carrychain.veronese import (HilbertFunction, VeroneseMatrix, carries_submatrix_check,
                                 veronese_matrix, veronese_transform)

from oracles import numerator_by_multiplication, series_by_division, trim


def hf(coeffs, n):
    return HilbertFunction(Polynomial(coeffs), n)


def decimate_by_series(h, n, b):
    """h<b> computed from long prefix-sum series."""
    length = 3 * (n + 2)
    a = series_by_division(h, n + 1, b * length + 1)
    out = numerator_by_multiplication([a[b * k] for k in range(length)], n + 1, length)
    assert all(x == 0 for x in out[n + 2:])
    return trim(out[:n + 2])


def test_examples():
    assert veronese_transform(hf([1], 0), 3) == hf([1], 0)
    assert veronese_transform(hf([1], 1), 2) == hf([1, 1], 1)


@pytest.mark.parametrize("h, n", [([1], 0), ([1, 2], 1), ([0, 0, 1], 1), ([3, -1, 2, 5], 2)])
def test_base_one_identity(h, n):
    assert veronese_transform(hf(h, n), 1) == hf(h, n)


def test_degree_bound_enforced():
    with pytest.raises(DomainError):
        hf([1, 1, 1], 0)
    with pytest.raises(DomainError):
        hf([1], -1)


@pytest.mark.parametrize("n", range(0, 5))
@pytest.mark.parametrize("b", range(1, 5))
def test_transform_matches_series(n, b):
    rng = random.Random(31 * n + b)
    h = [rng.randint(-9, 9) for _ in range(n + 2)]
    assert list(veronese_transform(hf(h, n), b).numerator) == decimate_by_series(h, n, b)


def test_matrix_small_cases():
    for n in range(4):
        assert veronese_matrix(n, 1).matrix == RatMatrix.identity(n + 2)
    # x/(1-x) = x + x^2 + ..., every second term gives x/(1-x) again
    assert veronese_matrix(0, 2).matrix == RatMatrix.identity(2)
    m = veronese_matrix(1, 2).matrix
    assert list(m.column(0)) == [1, 1, 0]
    assert m[1, 1] == 2


def test_submatrix_examples():
    assert carries_submatrix_check(1, 2)
    m = veronese_matrix(2, 2).matrix
    assert m.submatrix([1, 2], [1, 2]) == RatMatrix.from_rows([[3, 1], [1, 3]])
    assert carries_submatrix_check(2, 2)
    assert carries_submatrix_check(3, 3)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("b", [2, 3, 4])
def test_submatrix_claim(n, b):
    result = carries_submatrix_check(n, b)
    assert result.ok and result.witness is None


def test_submatrix_rejects_degenerate():
    with pytest.raises(DomainError):
        carries_submatrix_check(0, 2)
    with pytest.raises(DomainError):
        carries_submatrix_check(2, 1)


def test_submatrix_reports_witness(monkeypatch):
    import carrychain.veronese as v

    wrong = carries_matrix_holte(3, 2)
    monkeypatch.setattr(v, "carries_matrix_holte", lambda b, m: wrong)
    result = v.carries_submatrix_check(2, 2)
    assert not result
    i, j, found, expected = result.witness
    assert (i, j) == (0, 0) and found == Fraction(3, 4) and expected == wrong[0, 0]


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("b", range(1, 5))
def test_matrix_agrees_with_transform(n, b):
    rng = random.Random(100 * n + b)
    vm = veronese_matrix(n, b)
    for _ in range(5):
        f = hf([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n + 2)], n)
        assert vm.apply(f) == veronese_transform(f, b)


@pytest.mark.parametrize("a, b", [(2, 3), (3, 2), (2, 2), (4, 1)])
def test_decimation_composes(a, b):
    rng = random.Random(a * 7 + b)
    for n in range(4):
        f = hf([rng.randint(-5, 5) for _ in range(n + 2)], n)
        once = veronese_transform(f, a * b)
        assert veronese_transform(veronese_transform(f, a), b) == once
        assert once.numerator.degree <= n + 1


def test_serialization():
    vm = veronese_matrix(2, 3)
    assert VeroneseMatrix.from_dict(vm.to_dict()) == vm
    f = hf(["1/2", 3], 1)
    assert HilbertFunction.from_dict(f.to_dict()) == f
