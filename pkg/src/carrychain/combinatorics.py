"""Eulerian numbers and digit-sum counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .exact import Polynomial, binomial


@dataclass(frozen=True)
class EulerianTable:
    """Row ``n`` of the Eulerian triangle; ``values[k]`` permutations of
    ``n`` symbols have exactly ``k`` descents."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise DomainError(f"Eulerian row {self.n} needs {self.n} values")

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return self.n

    def total(self) -> int:
        return sum(self.values)


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = []
    for k in range(n):
        # A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)
        stay = (k + 1) * prev[k] if k < n - 1 else 0
        grow = (n - k) * prev[k - 1] if k >= 1 else 0
        row.append(stay + grow)
    return tuple(row)


def eulerian_numbers(n: int) -> EulerianTable:
    if n < 1:
        raise DomainError(f"Eulerian numbers need n >= 1, got {n}")
    return EulerianTable(n, _eulerian_row(n))


def eulerian_polynomial(n: int) -> Polynomial:
    """A_n(x) = sum_k A(n,k) x^k."""
    return Polynomial(eulerian_numbers(n).values)


def _check_digit_args(b: int, n: int) -> None:
    if b < 1:
        raise DomainError(f"base must be >= 1, got {b}")
    if n < 0:
        raise DomainError(f"digit count must be >= 0, got {n}")


def digit_sum_count(b: int, i: int, n: int) -> int:
    """Number of ways to write ``i`` as an ordered sum of ``n`` digits in
    ``{0, ..., b-1}``, i.e. the coefficient of x^i in (1 + x + ... + x^(b-1))^n.

    Computed by inclusion-exclusion over digits forced to be >= b.
    """
    _check_digit_args(b, n)
    if i < 0 or i > n * (b - 1):
        return 0
    if n == 0:
        return 1 if i == 0 else 0
    total = 0
    for r in range(min(n, i // b) + 1):
        term = binomial(n, r) * binomial(i - r * b + n - 1, n - 1)
        total += -term if r & 1 else term
    return total


@lru_cache(maxsize=256)
def digit_polynomial_power(b: int, n: int) -> Polynomial:
    """(1 + x + ... + x^(b-1))^n by repeated multiplication."""
    _check_digit_args(b, n)
    return Polynomial([1] * b) ** n


def digit_sum_count_by_powering(b: int, i: int, n: int) -> int:
    """Same quantity as :func:`digit_sum_count`, read off the expanded power."""
    _check_digit_args(b, n)
    if i < 0:
        return 0
    c = digit_polynomial_power(b, n).coefficient(i)
    return int(c)

