"""The coefficient-extraction operator Phi_b on functions h(x) / (1 - x)^n.

``Phi_b`` sends ``sum a_k x^k`` to ``sum a_{bk+b-1} x^k``.  On numerators h with
``deg h <= n - 2`` it acts linearly and keeps the pole order, so it is computed
here two ways:

* :func:`phi_b_oracle` expands the Taylor series, picks out every b-th
  coefficient and multiplies back by ``(1 - x)^n``;
* :func:`phi_b_matrix` applies the transposed base-b carries matrix for
  ``n - 1`` addends, scaled by ``b^(n-1)``.

The two must agree exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .carries import carries_matrix_holte
from .combinatorics import eulerian_polynomial
from .errors import ConsistencyError, DomainError
from .exact import Polynomial, as_rational, binomial


@dataclass(frozen=True)
class ClassAFunction:
    """``numerator(x) / (1 - x)**pole_order`` with ``deg numerator <= pole_order - 2``.

    The zero numerator is accepted with any nonnegative pole order.
    """

    numerator: Polynomial
    pole_order: int

    def __post_init__(self):
        if not isinstance(self.numerator, Polynomial):
            object.__setattr__(self, "numerator", Polynomial(self.numerator))
        n = self.pole_order
        if self.numerator.is_zero():
            if n < 0:
                raise DomainError(f"pole order must be >= 0, got {n}")
            return
        if n < 2:
            raise DomainError(f"pole order must be >= 2 for a nonzero numerator, got {n}")
        if self.numerator.degree > n - 2:
            raise DomainError(
                f"numerator degree {self.numerator.degree} exceeds pole order - 2 = {n - 2}"
            )

    def __add__(self, other: ClassAFunction) -> ClassAFunction:
        if self.pole_order != other.pole_order:
            raise DomainError("cannot add functions with different pole orders")
        return ClassAFunction(self.numerator + other.numerator, self.pole_order)

    def __mul__(self, c) -> ClassAFunction:
        return ClassAFunction(self.numerator * as_rational(c), self.pole_order)

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {"numerator": self.numerator.to_json(), "pole_order": self.pole_order}

    @classmethod
    def from_dict(cls, data: dict) -> ClassAFunction:
        return cls(Polynomial.from_json(data["numerator"]), int(data["pole_order"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> ClassAFunction:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SeriesPrefix:
    coefficients: tuple[Fraction, ...]

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)


def taylor_prefix(f: ClassAFunction, length: int) -> SeriesPrefix:
    """First ``length`` Taylor coefficients of ``f`` at 0."""
    if length < 0:
        raise DomainError("negative prefix length")
    n = f.pole_order
    h = f.numerator.coefficients
    out = []
    for k in range(length):
        out.append(sum((hj * binomial(k - j + n - 1, n - 1) for j, hj in enumerate(h)),
                       Fraction(0)))
    return SeriesPrefix(tuple(out))


def _times_one_minus_x_power(seq, n: int) -> list[Fraction]:
    # truncated product of seq with (1 - x)^n
    weights = [(-1) ** t * binomial(n, t) for t in range(n + 1)]
    return [sum((weights[t] * seq[i - t] for t in range(min(i, n) + 1)), Fraction(0))
            for i in range(len(seq))]


def _check_base(b: int) -> None:
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise DomainError(f"base must be an integer >= 1, got {b!r}")


def phi_b_oracle(f: ClassAFunction, b: int) -> ClassAFunction:
    """Phi_b by direct coefficient extraction from the Taylor series."""
    _check_base(b)
    n = f.pole_order
    if f.numerator.is_zero():
        return f
    count = 2 * n + 1
    series = taylor_prefix(f, b * (count - 1) + b)
    picked = [series[b * k + b - 1] for k in range(count)]
    h = _times_one_minus_x_power(picked, n)
    for i in range(n - 1, count):
        if h[i] != 0:
            raise ConsistencyError(
                f"Phi_{b} left a nonzero coefficient {h[i]} at degree {i} > {n - 2}"
            )
    return ClassAFunction(Polynomial(h[:n - 1]), n)


def phi_b_matrix(f: ClassAFunction, b: int) -> ClassAFunction:
    """Phi_b through the carries chain: h'_i = b^(n-1) sum_j K_b[j, i] h_j."""
    _check_base(b)
    n = f.pole_order
    if f.numerator.is_zero():
        return f
    m = n - 1
    k = carries_matrix_holte(b, m).matrix
    h = [f.numerator.coefficient(j) for j in range(m)]
    # row vector times K is the transposed action
    image = k.left_apply(h)
    scale = b ** m
    return ClassAFunction(Polynomial(scale * c for c in image), n)


def phi_b_iterate(f: ClassAFunction, b: int, r: int) -> ClassAFunction:
    """Phi_b applied ``r`` times."""
    _check_base(b)
    if r < 0:
        raise DomainError(f"iteration count must be >= 0, got {r}")
    for _ in range(r):
        f = phi_b_matrix(f, b)
    return f


def phi_b_limit(f: ClassAFunction) -> ClassAFunction:
    """lim_r Phi_b^r(f) / b^(r(n-1)) = A_{n-1}(x) h(1) / ((n-1)! (1-x)^n)."""
    n = f.pole_order
    h1 = f.numerator(1)
    if h1 == 0:
        return ClassAFunction(Polynomial(), n)
    return ClassAFunction(eulerian_polynomial(n - 1) * Fraction(h1, factorial(n - 1)), n)


def max_norm_distance(p: Polynomial, q: Polynomial) -> Fraction:
    size = max(len(p), len(q))
    return max((abs(p.coefficient(i) - q.coefficient(i)) for i in range(size)),
               default=Fraction(0))


def convergence_trace(f: ClassAFunction, b: int, r_max: int) -> list[Fraction]:
    """Max-norm distances d_1..d_rmax from the normalized iterates to the limit."""
    _check_base(b)
    if b < 2:
        raise DomainError("convergence needs base >= 2")
    if r_max < 1:
        raise DomainError(f"need at least one iteration, got {r_max}")
    if f.numerator(1) == 0:
        raise DomainError("h(1) = 0: the normalized iterates tend to zero")
    n = f.pole_order
    limit = phi_b_limit(f).numerator
    growth = b ** (n - 1)
    distances = []
    current = f
    for r in range(1, r_max + 1):
        current = phi_b_matrix(current, b)
        normalized = current.numerator * Fraction(1, growth ** r)
        distances.append(max_norm_distance(normalized, limit))
    return distances

