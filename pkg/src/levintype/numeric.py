"""Scalar realizations, polynomials and truncated power series.

Everything in the package is written against plain Python arithmetic, so the
same code runs on ``float`` (IEEE binary64) and on ``fractions.Fraction``
(exact big-integer rationals).  A :class:`Field` object carries the few
realization-specific decisions: how to convert literals, and when a value is
treated as zero.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence as _Seq, Union

Scalar = Union[float, Fraction, int]

EPS = sys.float_info.epsilon


class SingularError(ZeroDivisionError):
    """Raised when a quantity that must be nonzero vanishes."""


@dataclass(frozen=True)
class Field:
    """One scalar realization.

    ``zero_factor`` scales the float near-zero test: a value ``x`` is treated
    as zero when ``|x| <= zero_factor * eps * scale``.  The exact field ignores
    it and compares against exact zero.
    """

    name: str
    exact: bool
    zero_factor: float = 1e2

    def convert(self, x) -> Scalar:
        if self.exact:
            if isinstance(x, str):
                return Fraction(x.strip())
            if isinstance(x, float):
                # binary64 values are dyadic rationals, so this is lossless
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, str):
            return float(Fraction(x.strip()))
        return float(x)

    def is_zero(self, x: Scalar, scale: Scalar = 1) -> bool:
        if self.exact:
            return x == 0
        return abs(x) <= self.zero_factor * EPS * abs(scale)

    def ratio(self, a, b) -> Scalar:
        """``a / b`` in this field, even when both operands are Python ints."""
        if self.exact:
            return Fraction(a) / Fraction(b)
        return float(a) / float(b)


FLOAT = Field("f64", exact=False)
RATIONAL = Field("rational", exact=True)


def field_named(name: str) -> Field:
    if name in ("f64", "float"):
        return FLOAT
    if name in ("rational", "exact"):
        return RATIONAL
    raise ValueError(f"unknown scalar mode {name!r}; expected 'f64' or 'rational'")


def infer_field(values: Iterable) -> Field:
    """Exact if every value is an int or Fraction, float otherwise."""
    for v in values:
        if not isinstance(v, Rational):
            return FLOAT
    return RATIONAL


def binomial_row(k: int) -> list[int]:
    """Integer binomial coefficients C(k, 0..k) by multiplicative recurrence."""
    row = [1]
    for j in range(k):
        row.append(row[-1] * (k - j) // (j + 1))
    return row


def pochhammer(x: Scalar, j: int) -> Scalar:
    """Rising factorial (x)_j = x (x+1) ... (x+j-1); (x)_0 = 1."""
    out = 1
    for i in range(j):
        out = out * (x + i)
    return out


def finite_difference(values: Union[Callable[[int], Scalar], _Seq], k: int, n: int) -> Scalar:
    """k-th forward difference at n: (-1)^k sum_j (-1)^j C(k,j) f(n+j).

    ``values`` is either a callable ``f(n)`` or an indexable holding f(0), f(1), ...
    """
    if k < 0:
        raise ValueError("difference order must be non-negative")
    if callable(values):
        f = values
    else:
        if n < 0 or n + k >= len(values):
            raise IndexError(f"need values at {n}..{n + k}, have 0..{len(values) - 1}")
        f = values.__getitem__
    total = 0
    for j, c in enumerate(binomial_row(k)):
        term = c * f(n + j)
        total = total + term if j % 2 == 0 else total - term
    return total if k % 2 == 0 else -total


# -- polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in increasing powers of z.  Trailing zeros are allowed."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Scalar]):
        object.__setattr__(self, "coeffs", tuple(coeffs) or (0,))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i]

    def __call__(self, z: Scalar) -> Scalar:
        return poly_eval(self, z)

    def degree(self, field: Field | None = None) -> int:
        """Highest index with a coefficient that is not (numerically) zero; -1 for 0."""
        field = field or infer_field(self.coeffs)
        scale = max((abs(c) for c in self.coeffs), default=0) or 1
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not field.is_zero(self.coeffs[i], scale):
                return i
        return -1

    def scaled(self, c: Scalar) -> "Polynomial":
        return Polynomial(c * a for a in self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self), len(other))
        a = self.coeffs + (0,) * (n - len(self))
        b = other.coeffs + (0,) * (n - len(other))
        return Polynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def shifted(self, power: int) -> "Polynomial":
        """Multiply by z**power."""
        return Polynomial((0,) * power + self.coeffs)


def poly_eval(p: Union[Polynomial, _Seq], z: Scalar) -> Scalar:
    coeffs = p.coeffs if isinstance(p, Polynomial) else p
    acc = 0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


# -- truncated power series --------------------------------------------------


def series_multiply(a: _Seq, b: _Seq, order: int) -> list:
    """First ``order + 1`` coefficients of the product of two series."""
    out = []
    for i in range(order + 1):
        acc = 0
        for j in range(i + 1):
            if j < len(a) and i - j < len(b):
                acc = acc + a[j] * b[i - j]
        out.append(acc)
    return out


def series_divide(num: _Seq, den: _Seq, order: int, field: Field | None = None) -> list:
    """First ``order + 1`` Taylor coefficients of num/den; missing entries are 0."""
    field = field or infer_field(list(num) + list(den))
    if not den or den[0] == 0:
        raise SingularError("series division needs a nonzero constant term in the denominator")
    d0 = field.convert(den[0]) if field.exact else den[0]
    out = []
    for i in range(order + 1):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc = acc - den[j] * out[i - j]
        out.append(acc / d0)
    return out


def partial_sums_poly(gamma: _Seq, n: int) -> Polynomial:
    """f_n(z) = sum_{nu<=n} gamma_nu z^nu as a polynomial."""
    if n >= len(gamma):
        raise IndexError(f"partial sum f_{n} needs gamma_0..gamma_{n}, have {len(gamma)} coefficients")
    return Polynomial(gamma[: n + 1])
