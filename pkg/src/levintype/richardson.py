"""Richardson-type extrapolation: polynomial extrapolation to x = 0.

These transformations need no remainder estimates.  The general member
R-G_k^(n)(q_m, s_n) uses weights prod_{m=0}^{k-1} (n+q_m), whose k-th
difference is always k!, so no denominator table is built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence as _Seq, Union

from .engine import TransformTable
from .numeric import Field, Scalar, SingularError, finite_difference, infer_field, pochhammer
from .schedules import QSchedule, ScheduleError
from .sequence import Sequence

QRule = Union[QSchedule, Callable[[int], Scalar]]


@dataclass(frozen=True)
class InterpolationPoints:
    """Strictly decreasing positive points x_start > x_start+1 > ... > 0."""

    x: tuple
    start: int = 0

    def __post_init__(self):
        xs = tuple(self.x)
        object.__setattr__(self, "x", xs)
        if any(v <= 0 for v in xs):
            raise ValueError("interpolation points must be positive")
        if any(b >= a for a, b in zip(xs, xs[1:])):
            raise ValueError("interpolation points must be strictly decreasing")

    @classmethod
    def levin(cls, beta: Scalar, count: int, start: int = 0, field: Optional[Field] = None) -> "InterpolationPoints":
        """x_n = 1/(beta + n), the points behind Lambda_k^(n)(beta)."""
        if field is not None:
            return cls(tuple(field.ratio(1, beta + n) for n in range(start, start + count)), start)
        return cls(tuple(1 / (beta + n) for n in range(start, start + count)), start)

    def __getitem__(self, n: int) -> Scalar:
        return self.x[n - self.start]


def _table(s: Sequence, rows: list, name: str, fld: Field, **meta) -> TransformTable:
    valid = [[True] * len(r) for r in rows]
    return TransformTable(s.start, None, None, rows, valid, fld, {"family": name, **meta})


def neville_at_zero(s: Sequence, x: InterpolationPoints, k_max: Optional[int] = None) -> TransformTable:
    """N_{k+1}^(n) = [x_n N_k^(n+1) - x_{n+k+1} N_k^(n)] / (x_n - x_{n+k+1})."""
    if x.start != s.start or len(x.x) < len(s):
        raise ValueError("interpolation points must cover the sequence window")
    top = len(s) - 1 if k_max is None else min(k_max, len(s) - 1)
    rows = [list(s.values)]
    for k in range(top):
        prev = rows[-1]
        nxt = []
        for i in range(len(prev) - 1):
            n = s.start + i
            xa, xb = x[n], x[n + k + 1]
            if xa == xb:
                raise SingularError(f"coincident interpolation points x_{n} and x_{n + k + 1}")
            nxt.append((xa * prev[i + 1] - xb * prev[i]) / (xa - xb))
        rows.append(nxt)
    return _table(s, rows, "neville", s.field)


# -- the general R-G transformation ------------------------------------------


def _qfun(q: QRule, q0: Optional[Scalar]) -> Callable[[int], Scalar]:
    """m -> q_m for m >= 0.

    A QSchedule's q_0 is its formula at m = 0 (beta for constant schedules,
    beta - 1 for factorial ones, ...) unless ``q0`` overrides it.
    """
    base = q.q if isinstance(q, QSchedule) else q

    def get(m):
        if m == 0 and q0 is not None:
            return q0
        try:
            return base(m)
        except ScheduleError:
            if m == 0:
                raise ScheduleError("schedule defines no q_0; pass q0 explicitly") from None
            raise
    return get


def rg_weight(q: Callable[[int], Scalar], k: int, n: int) -> Scalar:
    """prod_{m=0}^{k-1} (n + q_m)."""
    out = 1
    for m in range(k):
        out = out * (n + q(m))
    return out


def rg_explicit(q: QRule, s: Sequence, k: int, n: int, q0: Optional[Scalar] = None) -> Scalar:
    """(-1)^k sum_{j=0}^{k} (-1)^j prod_{m=0}^{k-1}(n+j+q_m) / (j!(k-j)!) s_{n+j}."""
    qf = _qfun(q, q0)
    fld = s.field
    total = 0
    for j in range(k + 1):
        w = fld.ratio(rg_weight(qf, k, n + j), math.factorial(j) * math.factorial(k - j))
        total = total + (w if j % 2 == 0 else -w) * s.s(n + j)
    return total if k % 2 == 0 else -total


def _forward_rows(s: Sequence, k_max: Optional[int], factor) -> list:
    """R_{k+1}^(n) = R_k^(n+1) + factor(k, n) * (R_k^(n+1) - R_k^(n))."""
    top = len(s) - 1 if k_max is None else min(k_max, len(s) - 1)
    rows = [list(s.values)]
    for k in range(top):
        prev = rows[-1]
        rows.append([prev[i + 1] + factor(k, s.start + i) * (prev[i + 1] - prev[i]) for i in range(len(prev) - 1)])
    return rows


def rg_recursive(q: QRule, s: Sequence, k_max: Optional[int] = None, q0: Optional[Scalar] = None) -> TransformTable:
    """Recursive scheme with factor (n + q_k)/(k + 1)."""
    qf = _qfun(q, q0)
    fld = s.field
    rows = _forward_rows(s, k_max, lambda k, n: fld.ratio(n + qf(k), k + 1))
    return _table(s, rows, "RG", fld)


# -- Lambda (q_m = beta) ------------------------------------------------------


def lambda_closed(beta: Scalar, s: Sequence, k: int, n: int) -> Scalar:
    """(-1)^k sum_j (-1)^j (beta+n+j)^k / (j!(k-j)!) s_{n+j}."""
    fld = s.field
    b = fld.convert(beta)
    total = 0
    for j in range(k + 1):
        w = fld.ratio((b + n + j) ** k, math.factorial(j) * math.factorial(k - j))
        total = total + (w if j % 2 == 0 else -w) * s.s(n + j)
    return total if k % 2 == 0 else -total


def lambda_recursive(beta: Scalar, s: Sequence, k_max: Optional[int] = None) -> TransformTable:
    fld = s.field
    b = fld.convert(beta)
    rows = _forward_rows(s, k_max, lambda k, n: (b + n) / (k + 1))
    return _table(s, rows, "lambda", fld, beta=str(beta))


# -- F, P and R-C ---------------------------------------------------------------


def f_explicit(chi: Scalar, s: Sequence, k: int, n: int) -> Scalar:
    """(-1)^k sum_j (-1)^j (chi+n+j)_k / (j!(k-j)!) s_{n+j}."""
    fld = s.field
    c = fld.convert(chi)
    total = 0
    for j in range(k + 1):
        w = fld.ratio(pochhammer(c + n + j, k), math.factorial(j) * math.factorial(k - j))
        total = total + (w if j % 2 == 0 else -w) * s.s(n + j)
    return total if k % 2 == 0 else -total


def p_explicit(zeta: Scalar, s: Sequence, k: int, n: int) -> Scalar:
    """sum_j (-1)^j (-zeta-n-j)_k / (j!(k-j)!) s_{n+j}."""
    fld = s.field
    z = fld.convert(zeta)
    total = 0
    for j in range(k + 1):
        w = fld.ratio(pochhammer(-z - n - j, k), math.factorial(j) * math.factorial(k - j))
        total = total + (w if j % 2 == 0 else -w) * s.s(n + j)
    return total


def rc_explicit(alpha: Scalar, chi: Scalar, s: Sequence, k: int, n: int) -> Scalar:
    """(-1)^k alpha^-k sum_j (-1)^j (alpha(chi+n+j))_k / (j!(k-j)!) s_{n+j}."""
    fld = s.field
    a, c = fld.convert(alpha), fld.convert(chi)
    total = 0
    for j in range(k + 1):
        w = fld.ratio(pochhammer(a * (c + n + j), k), math.factorial(j) * math.factorial(k - j))
        total = total + (w if j % 2 == 0 else -w) * s.s(n + j)
    total = total / a ** k
    return total if k % 2 == 0 else -total


def f_variant(chi: Scalar, s: Sequence, k_max: Optional[int] = None) -> TransformTable:
    """q_m = chi + m; recursion factor (chi+n+k)/(k+1)."""
    c = s.field.convert(chi)
    return _table(s, _forward_rows(s, k_max, lambda k, n: (c + n + k) / (k + 1)), "F", s.field, chi=str(chi))


def p_variant(zeta: Scalar, s: Sequence, k_max: Optional[int] = None) -> TransformTable:
    """q_m = zeta - m; recursion factor (zeta+n-k)/(k+1)."""
    z = s.field.convert(zeta)
    return _table(s, _forward_rows(s, k_max, lambda k, n: (z + n - k) / (k + 1)), "P", s.field, zeta=str(zeta))


def rc_variant(alpha: Scalar, chi: Scalar, s: Sequence, k_max: Optional[int] = None) -> TransformTable:
    """q_m = chi + m/alpha; recursion factor (chi+n+k/alpha)/(k+1)."""
    a, c = s.field.convert(alpha), s.field.convert(chi)
    rows = _forward_rows(s, k_max, lambda k, n: (c + n + k / a) / (k + 1))
    return _table(s, rows, "RC", s.field, alpha=str(alpha), chi=str(chi))


def f_schedule(chi: Scalar) -> Callable[[int], Scalar]:
    return lambda m: chi + m


def p_schedule(zeta: Scalar) -> Callable[[int], Scalar]:
    return lambda m: zeta - m


def rc_schedule(alpha: Scalar, chi: Scalar, field: Optional[Field] = None) -> Callable[[int], Scalar]:
    fld = field or infer_field([alpha, chi])
    return lambda m: chi + fld.ratio(m, alpha)


def denominator_identity(q: QRule, k: int, n: int, q0: Optional[Scalar] = None) -> Scalar:
    """Delta^k prod_{m=0}^{k-1}(n+q_m) evaluated by the finite-difference sum (equals k!)."""
    qf = _qfun(q, q0)
    return finite_difference(lambda x: rg_weight(qf, k, x), k, n)


__all__ = [
    "InterpolationPoints", "denominator_identity", "f_explicit", "f_schedule", "f_variant", "lambda_closed",
    "lambda_recursive", "neville_at_zero", "p_explicit", "p_schedule", "p_variant", "rc_explicit",
    "rc_schedule", "rc_variant", "rg_explicit", "rg_recursive", "rg_weight",
]
