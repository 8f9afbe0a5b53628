"""Exact rational scalars, dense polynomials and dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps values in lowest
terms with a positive denominator, so equality is structural.  Polynomials and
matrices are immutable and hashable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, ShapeError

Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -math.inf


def as_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Scalar) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the value is an integer."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`. Accepts ``"p"`` or ``"p/q"``."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None
    if q == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


class Polynomial:
    """Dense polynomial over the rationals, ascending coefficients.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and degree :data:`ZERO_DEGREE`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar | str] = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> Polynomial:
        if power < 0:
            raise DomainError("negative exponent")
        return cls([0] * power + [coeff])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self._coeffs))

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return Polynomial([other]) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(c * a for a in self._coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> Polynomial:
        return cls(as_rational(c) for c in data)


class RatMatrix:
    """Dense row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar | str]):
        entries = tuple(as_rational(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Fraction, ...] = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar | str]]) -> RatMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for shape {self.shape}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows,
                         (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> RatMatrix:
        return self.transpose()

    def scale(self, c: Scalar) -> RatMatrix:
        c = as_rational(c)
        return RatMatrix(self.rows, self.cols, (c * e for e in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RatMatrix:
        return RatMatrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    def apply(self, vector: Sequence[Scalar]) -> list[Fraction]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        return [sum((a * v for a, v in zip(self.row(i), vector)), Fraction(0))
                for i in range(self.rows)]

    def left_apply(self, vector: Sequence[Scalar]) -> list[Fraction]:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise ShapeError(f"row vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        return [sum((v * a for v, a in zip(vector, self.column(j))), Fraction(0))
                for j in range(self.cols)]

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatMatrix):
            return self.shape == other.shape and self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatMatrix", self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(e) for e in r) + "]" for r in self.to_rows())
        return f"RatMatrix([{body}])"

    def to_json(self) -> list[list[str]]:
        return [[format_rational(e) for e in r] for r in self.to_rows()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str | int]]) -> RatMatrix:
        return cls.from_rows(data)


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for col in bcols:
            out.append(sum((x * y for x, y in zip(arow, col)), Fraction(0)))
    return RatMatrix(a.rows, b.cols, out)


def mat_pow(a: RatMatrix, r: int) -> RatMatrix:
    """``a**r`` by repeated squaring; ``a**0`` is the identity."""
    if a.rows != a.cols:
        raise ShapeError(f"matrix power of non-square {a.rows}x{a.cols} matrix")
    if r < 0:
        raise DomainError("negative matrix power")
    result = RatMatrix.identity(a.rows)
    base = a
    while r:
        if r & 1:
            result = mat_mul(result, base)
        r >>= 1
        if r:
            base = mat_mul(base, base)
    return result
