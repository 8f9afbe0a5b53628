"""Decimation of Hilbert series: h(x)/(1-x)^(n+1) -> sum a_{bk} x^k.

The numerator map h -> h<b> is linear; its matrix M_b is assembled column by
column from the monomials x^j.  Deleting the first and last rows and columns of
M_b, dividing by b^n and transposing gives the carries matrix for n addends,
which :func:`carries_submatrix_check` verifies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .carries import carries_matrix_holte
from .errors import ConsistencyError, DomainError
from .exact import Polynomial, RatMatrix, binomial


@dataclass(frozen=True)
class HilbertFunction:
    """``numerator(x) / (1 - x)**(n + 1)`` with ``deg numerator <= n + 1``."""

    numerator: Polynomial
    n: int

    def __post_init__(self):
        if not isinstance(self.numerator, Polynomial):
            object.__setattr__(self, "numerator", Polynomial(self.numerator))
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.numerator.degree > self.n + 1:
            raise DomainError(
                f"numerator degree {self.numerator.degree} exceeds n + 1 = {self.n + 1}"
            )

    def series(self, length: int) -> list[Fraction]:
        p = self.n + 1
        h = self.numerator.coefficients
        return [sum((hj * binomial(k - j + p - 1, p - 1) for j, hj in enumerate(h)), Fraction(0))
                for k in range(length)]

    def to_dict(self) -> dict:
        return {"numerator": self.numerator.to_json(), "n": self.n}

    @classmethod
    def from_dict(cls, data: dict) -> HilbertFunction:
        return cls(Polynomial.from_json(data["numerator"]), int(data["n"]))


@dataclass(frozen=True)
class VeroneseMatrix:
    base: int
    n: int
    matrix: RatMatrix

    def apply(self, f: HilbertFunction) -> HilbertFunction:
        if f.n != self.n:
            raise DomainError(f"matrix is for n = {self.n}, function has n = {f.n}")
        h = [f.numerator.coefficient(j) for j in range(self.n + 2)]
        return HilbertFunction(Polynomial(self.matrix.apply(h)), self.n)

    def to_dict(self) -> dict:
        return {"base": self.base, "n": self.n, "matrix": self.matrix.to_json()}

    @classmethod
    def from_dict(cls, data: dict) -> VeroneseMatrix:
        return cls(int(data["base"]), int(data["n"]), RatMatrix.from_json(data["matrix"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _check_base(b: int) -> None:
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise DomainError(f"base must be an integer >= 1, got {b!r}")


def veronese_transform(f: HilbertFunction, b: int) -> HilbertFunction:
    _check_base(b)
    p = f.n + 1
    count = 2 * (f.n + 2)
    a = f.series(b * (count - 1) + 1)
    picked = [a[b * k] for k in range(count)]
    weights = [(-1) ** t * binomial(p, t) for t in range(p + 1)]
    h = [sum((weights[t] * picked[i - t] for t in range(min(i, p) + 1)), Fraction(0))
         for i in range(count)]
    for i in range(f.n + 2, count):
        if h[i] != 0:
            raise ConsistencyError(
                f"decimation left a nonzero coefficient {h[i]} at degree {i} > {f.n + 1}"
            )
    return HilbertFunction(Polynomial(h[:f.n + 2]), f.n)


@lru_cache(maxsize=128)
def veronese_matrix(n: int, b: int) -> VeroneseMatrix:
    _check_base(b)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    size = n + 2
    columns = []
    for j in range(size):
        image = veronese_transform(HilbertFunction(Polynomial.monomial(j), n), b).numerator
        columns.append([image.coefficient(i) for i in range(size)])
    entries = [columns[j][i] for i in range(size) for j in range(size)]
    return VeroneseMatrix(b, n, RatMatrix(size, size, entries))


@dataclass(frozen=True)
class SubmatrixCheck:
    ok: bool
    # (row, col, found, expected) of the first mismatch
    witness: tuple[int, int, Fraction, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.ok


def carries_submatrix_check(n: int, b: int) -> SubmatrixCheck:
    """Compare the scaled, transposed interior of M_b with K_b for n addends."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if isinstance(b, bool) or not isinstance(b, int) or b < 2:
        raise DomainError(f"base must be an integer >= 2, got {b!r}")
    m = veronese_matrix(n, b).matrix
    inner = list(range(1, n + 1))
    candidate = m.submatrix(inner, inner).scale(Fraction(1, b ** n)).transpose()
    k = carries_matrix_holte(b, n).matrix
    for i in range(n):
        for j in range(n):
            if candidate[i, j] != k[i, j]:
                return SubmatrixCheck(False, (i, j, candidate[i, j], k[i, j]))
    return SubmatrixCheck(True)
