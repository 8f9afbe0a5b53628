"""Holte's carries chain: the transition matrix for adding ``m`` random base-``b`` numbers.

Storage convention: ``K[i, j] = P(next carry = j | current carry = i)``, rows are
the current carry.  Two independent constructions are provided and must agree
exactly: the closed alternating sum, and digit-sum counts of
``(1 + x + ... + x^(b-1))^(m+1)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import digit_sum_count, eulerian_numbers
from .errors import DomainError
from .exact import RatMatrix, binomial, mat_pow


@dataclass(frozen=True)
class CarriesMatrix:
    base: int
    addends: int
    matrix: RatMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.addends, self.addends):
            raise DomainError(
                f"carries matrix for {self.addends} addends must be "
                f"{self.addends}x{self.addends}, got {self.matrix.rows}x{self.matrix.cols}"
            )

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.matrix[ij]

    def is_stochastic(self) -> bool:
        m = self.matrix
        return (all(0 <= e <= 1 for e in m.entries)
                and all(sum(m.row(i)) == 1 for i in range(m.rows)))

    def to_dict(self) -> dict:
        return {"base": self.base, "addends": self.addends, "matrix": self.matrix.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> CarriesMatrix:
        return cls(int(data["base"]), int(data["addends"]), RatMatrix.from_json(data["matrix"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> CarriesMatrix:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        return matrix_to_csv(self.matrix)


def matrix_to_csv(matrix: RatMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in matrix.to_json():
        writer.writerow(row)
    return buf.getvalue()


def matrix_from_csv(text: str) -> RatMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return RatMatrix.from_rows(rows)


def _check(b: int, m: int) -> None:
    if isinstance(b, bool) or not isinstance(b, int):
        raise DomainError(f"base must be an integer, got {b!r}")
    if b < 1:
        raise DomainError(f"base must be >= 1, got {b}")
    if m < 1:
        raise DomainError(f"number of addends must be >= 1, got {m}")


def holte_entry(b: int, m: int, i: int, j: int) -> Fraction:
    """P(carry i -> carry j) for m addends in base b, by Holte's closed formula."""
    total = 0
    for r in range(j - i // b + 1):
        term = binomial(m + 1, r) * binomial(m - 1 - i + (j + 1 - r) * b, m)
        total += -term if r & 1 else term
    return Fraction(total, b ** m)


@lru_cache(maxsize=512)
def carries_matrix_holte(b: int, m: int) -> CarriesMatrix:
    _check(b, m)
    entries = [holte_entry(b, m, i, j) for i in range(m) for j in range(m)]
    return CarriesMatrix(b, m, RatMatrix(m, m, entries))


@lru_cache(maxsize=512)
def carries_matrix_from_counts(b: int, m: int) -> CarriesMatrix:
    """K[j, i] = C_b(i*b - j + b - 1, m + 1) / b^m."""
    _check(b, m)
    scale = b ** m
    entries = [Fraction(digit_sum_count(b, i * b - j + b - 1, m + 1), scale)
               for j in range(m) for i in range(m)]
    return CarriesMatrix(b, m, RatMatrix(m, m, entries))


def carries_stationary(m: int) -> list[Fraction]:
    """The base-independent stationary law A(m, k) / m!."""
    if m < 1:
        raise DomainError(f"number of addends must be >= 1, got {m}")
    nf = factorial(m)
    return [Fraction(a, nf) for a in eulerian_numbers(m).values]


def r_step_transition(k: CarriesMatrix, r: int) -> CarriesMatrix:
    """K^r, which is the carries matrix of base ``k.base ** r``."""
    if r < 0:
        raise DomainError(f"step count must be >= 0, got {r}")
    return CarriesMatrix(k.base ** r, k.addends, mat_pow(k.matrix, r))

