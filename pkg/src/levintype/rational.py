"""Rational approximants from power-series partial sums.

Applied to f_n(z) = sum_{nu<=n} gamma_nu z^nu, the u, t and d variants give a
ratio of polynomials

    sum_j lambda_j z^(k-j) f_{n+j}(z)  /  sum_j lambda_j z^(k-j)

of degrees k+n (or k+n+1 for d) over k.  The v variant adds the terms
z * sum_j mu_j z^(k-j) (...) to both sums.  The Taylor expansion of such an
approximant agrees with the series through a guaranteed order, and its later
coefficients serve as predictions for unknown gamma_nu.

Wynn's epsilon algorithm supplies ordinary Pade values for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional, Sequence as _Seq

from .engine import TransformTable, g_weights
from .numeric import (RATIONAL, Field, Polynomial, Scalar, SingularError, infer_field, partial_sums_poly,
                      series_divide)
from .schedules import QSchedule
from .sequence import Sequence

VARIANTS = ("u", "t", "d", "v")


@dataclass(frozen=True)
class RationalApproximant:
    numerator: Polynomial
    denominator: Polynomial
    variant: str
    k: int
    n: int
    schedule: str
    lambdas: tuple = ()
    mus: tuple = ()
    field: Field = dc_field(default=RATIONAL, compare=False)
    asymptotic: bool = False

    def __call__(self, z: Scalar) -> Scalar:
        den = self.denominator(z)
        if den == 0:
            raise SingularError(f"approximant has a pole at z = {z}")
        return self.numerator(z) / den

    def taylor(self, order: int) -> list:
        """Taylor coefficients 0..order of numerator/denominator."""
        return series_divide(self.numerator.coeffs, self.denominator.coeffs, order, self.field)

    @property
    def inputs_used(self) -> int:
        """Number of series coefficients gamma_0.. consumed by the construction."""
        return self.k + self.n + (2 if self.variant in ("d", "v") else 1)

    @property
    def guaranteed_order(self) -> int:
        """Matched-coefficient count promised by construction."""
        if self.variant in ("d", "v") and self.k >= 1 and not self.asymptotic:
            return self.k + self.n + 2
        return self.k + self.n + 1


def _estimate_coeffs(variant: str, k: int, n: int, coef: Callable[[int], Scalar], q0: Scalar):
    """Per-j divisors of the lambda (and mu) weights."""
    if variant == "u":
        return [(n + j + q0) * coef(n + j) for j in range(k + 1)], None
    if variant == "t":
        return [coef(n + j) for j in range(k + 1)], None
    if variant == "d":
        return [coef(n + j + 1) for j in range(k + 1)], None
    if variant == "v":
        return [coef(n + j + 1) for j in range(k + 1)], [coef(n + j) for j in range(k + 1)]
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def build_variant_approximant(variant: str, q: QSchedule, k: int, n: int, gamma: _Seq[Scalar],
                              gamma_inf: Optional[Callable[[int], Scalar]] = None,
                              q0: Optional[Scalar] = None, field: Optional[Field] = None) -> RationalApproximant:
    """Rational approximant of the ``variant`` transformation of order k at column n.

    ``gamma_inf`` replaces the coefficients entering the remainder estimates
    by an asymptotic rule; the partial sums still use ``gamma``.  The result
    is normalized so that the denominator's constant term is 1.
    """
    fld = field or infer_field(gamma)
    gamma = [fld.convert(g) for g in gamma]
    need = k + n + (2 if variant in ("d", "v") else 1)
    if len(gamma) < need:
        raise IndexError(f"the {variant} variant with k={k}, n={n} needs gamma_0..gamma_{need - 1}")
    q = q.converted(fld)
    if q0 is None:
        q0 = q.q(1)
    q0 = fld.convert(q0)

    def coef(i):
        return fld.convert(gamma_inf(i)) if gamma_inf is not None else gamma[i]

    divs, mdivs = _estimate_coeffs(variant, k, n, coef, q0)
    for j, d in enumerate(divs + (mdivs or [])):
        if d == 0:
            raise SingularError(f"{variant} variant divides by a vanishing coefficient (j={j})")
    w = g_weights(k, n, q, fld)
    lam = [wj / d for wj, d in zip(w, divs)]
    mu = [-wj / d for wj, d in zip(w, mdivs)] if mdivs else []

    den = Polynomial([0])
    num = Polynomial([0])
    for j in range(k + 1):
        f = partial_sums_poly(gamma, n + j)
        den = den + Polynomial([lam[j]]).shifted(k - j)
        num = num + (f * Polynomial([lam[j]])).shifted(k - j)
        if mu:
            den = den + Polynomial([mu[j]]).shifted(k - j + 1)
            num = num + (f * Polynomial([mu[j]])).shifted(k - j + 1)
    c0 = den.coeffs[0]
    if c0 == 0 or fld.is_zero(c0, max(abs(c) for c in den.coeffs)):
        raise SingularError("denominator polynomial has a vanishing constant term")
    num, den = num.scaled(1 / c0), den.scaled(1 / c0)
    return RationalApproximant(num, den, variant, k, n, q.label(), tuple(lam), tuple(mu), fld,
                               asymptotic=gamma_inf is not None)


def check_order(approx: RationalApproximant, gamma: _Seq[Scalar], tol: float = 1e-10) -> int:
    """Largest M such that Taylor coefficients 0..M-1 equal gamma_0..gamma_{M-1}.

    Counting is exact for rational scalars; floats are compared with the
    relative tolerance ``tol``.  If all available coefficients match, the
    result is len(gamma), a lower bound.
    """
    if len(gamma) == 0:
        return 0
    fld = approx.field
    gamma = [fld.convert(g) for g in gamma]
    coeffs = approx.taylor(len(gamma) - 1)
    for i, (c, g) in enumerate(zip(coeffs, gamma)):
        same = c == g if fld.exact else abs(c - g) <= tol * max(1.0, abs(g))
        if not same:
            return i
    return len(gamma)


@dataclass(frozen=True)
class Prediction:
    """Taylor coefficients of an approximant beyond the data it consumed.

    ``values[i]`` predicts gamma_{first + i}.  Coefficients below
    ``guaranteed`` reproduce the input by construction.
    """

    first: int
    values: tuple
    guaranteed: int
    approximant: RationalApproximant


def predict(variant: str, q: QSchedule, k: int, n: int, gamma: _Seq[Scalar], count: int = 3,
            gamma_inf: Optional[Callable[[int], Scalar]] = None, q0: Optional[Scalar] = None,
            field: Optional[Field] = None) -> Prediction:
    approx = build_variant_approximant(variant, q, k, n, gamma, gamma_inf, q0, field)
    first = approx.inputs_used
    coeffs = approx.taylor(first + count - 1)
    return Prediction(first, tuple(coeffs[first:]), approx.guaranteed_order, approx)


# -- Wynn's epsilon algorithm -------------------------------------------------


def wynn_epsilon(s: Sequence, k_max: Optional[int] = None, field: Optional[Field] = None) -> list:
    """Full epsilon table; ``eps[k][i]`` is eps_k^(start+i), None where undefined.

    eps_{-1} = 0, eps_0 = s_n and eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1/(eps_k^(n+1) - eps_k^(n)).
    """
    fld = field or s.field
    vals = [fld.convert(v) for v in s.values]
    top = len(vals) - 1 if k_max is None else min(k_max, len(vals) - 1)
    prev2 = [fld.convert(0)] * (len(vals) + 1)
    eps = [vals]
    for k in range(top):
        cur = eps[-1]
        nxt = []
        for i in range(len(cur) - 1):
            a, b, c = cur[i], cur[i + 1], prev2[i + 1]
            if a is None or b is None or c is None:
                nxt.append(None)
                continue
            diff = b - a
            scale = max(abs(a), abs(b))
            if fld.is_zero(diff, scale):
                nxt.append(None)
            else:
                nxt.append(c + 1 / diff)
        prev2 = cur
        eps.append(nxt)
    return eps


def epsilon_table(s: Sequence, k_max: Optional[int] = None, field: Optional[Field] = None) -> TransformTable:
    """Even epsilon columns as a table: row k holds eps_{2k}^(n)."""
    fld = field or s.field
    eps = wynn_epsilon(s, None if k_max is None else 2 * k_max, fld)
    rows = eps[0::2]
    values = [list(r) for r in rows]
    valid = [[v is not None for v in r] for r in rows]
    return TransformTable(s.start, None, None, values, valid, fld, {"family": "epsilon"})


def pade_epsilon(gamma: _Seq[Scalar], z: Scalar, field: Optional[Field] = None) -> dict:
    """Pade values [l/m](z) from the epsilon table of the partial sums f_n(z).

    Returns a mapping (l, m) -> value with eps_{2m}^(n) = [n+m/m](z).
    """
    fld = field or infer_field(list(gamma) + [z])
    z = fld.convert(z)
    sums, acc, p = [], fld.convert(0), fld.convert(1)
    for g in gamma:
        acc = acc + fld.convert(g) * p
        sums.append(acc)
        p = p * z
    eps = wynn_epsilon(Sequence(tuple(sums)), field=fld)
    out = {}
    for k2 in range(0, len(eps), 2):
        m = k2 // 2
        for n, v in enumerate(eps[k2]):
            if v is not None:
                out[(n + m, m)] = v
    return out


__all__ = [
    "Prediction", "RationalApproximant", "VARIANTS", "build_variant_approximant", "check_order",
    "epsilon_table", "pade_epsilon", "predict", "wynn_epsilon",
]
