"""Model sequences and reference problems with independent reference values."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Optional

from scipy import integrate

from . import schedules as sch
from .numeric import RATIONAL, Field, Scalar
from .schedules import QSchedule
from .sequence import Sequence


# -- model sequences -------------------------------------------------------------


@dataclass(frozen=True)
class ModelSequence:
    """s_n = s + omega_n sum_{j<k} c_j / prod_{m=1}^{j} (n + q_m).

    Its order-k transformation with the same schedule and omega_n returns
    ``limit`` exactly.
    """

    schedule: QSchedule
    coeffs: tuple
    limit: Scalar = 0
    omega: Callable[[int], Scalar] = dc_field(default=lambda n: 1, compare=False)

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("model sequences need c_0 != 0")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def first_valid_index(self) -> int:
        """Smallest n >= 0 where every product n + q_m (m < k) is nonzero."""
        n = 0
        while any(n + self.schedule.q(m) == 0 for m in range(1, self.order)):
            n += 1
        return n

    def element(self, n: int, fld: Field = RATIONAL) -> Scalar:
        q = self.schedule.converted(fld)
        total, prod = fld.convert(0), fld.convert(1)
        for j, c in enumerate(self.coeffs):
            if j > 0:
                prod = prod * (n + q.q(j))
                if prod == 0:
                    raise ZeroDivisionError(f"model sequence undefined at n={n}: n + q_{j} = 0")
            total = total + fld.convert(c) / prod
        return fld.convert(self.limit) + fld.convert(self.omega(n)) * total


def g_model(q: QSchedule, coeffs, limit: Scalar = 0, omega: Callable[[int], Scalar] = lambda n: 1) -> ModelSequence:
    return ModelSequence(q, tuple(coeffs), limit, omega)


def levin_model(beta: Scalar = 1, coeffs=(1,), limit: Scalar = 0, omega=lambda n: 1) -> ModelSequence:
    return ModelSequence(sch.constant(beta), tuple(coeffs), limit, omega)


def factorial_model(beta: Scalar = 1, coeffs=(1,), limit: Scalar = 0, omega=lambda n: 1) -> ModelSequence:
    return ModelSequence(sch.factorial_shift(beta), tuple(coeffs), limit, omega)


def m_model(xi: Scalar = 1, coeffs=(1,), limit: Scalar = 0, omega=lambda n: 1) -> ModelSequence:
    return ModelSequence(sch.reverse_shift(xi), tuple(coeffs), limit, omega)


def c_model(alpha: Scalar, beta: Scalar = 1, coeffs=(1,), limit: Scalar = 0, omega=lambda n: 1) -> ModelSequence:
    return ModelSequence(sch.interpolating(alpha, beta), tuple(coeffs), limit, omega)


@dataclass(frozen=True)
class RichardsonModel:
    """s_n = s + sum_{j<k} c_j / prod_{m=0}^{j} (n + q_m), with q given for m >= 0."""

    q: Callable[[int], Scalar]
    coeffs: tuple
    limit: Scalar = 0

    def element(self, n: int, fld: Field = RATIONAL) -> Scalar:
        total, prod = fld.convert(0), fld.convert(1)
        for j, c in enumerate(self.coeffs):
            prod = prod * (n + fld.convert(self.q(j)))
            total = total + fld.convert(c) / prod
        return fld.convert(self.limit) + total


@dataclass(frozen=True)
class AsyModel:
    """s_n = s + z^(n+1) n^theta (a0 + a1/n + a2/n^2), defined for n >= 1.

    ``theta`` must be an integer for exact generation.
    """

    z: Scalar
    theta: int
    a0: Scalar = 1
    a1: Scalar = 0
    a2: Scalar = 0
    limit: Scalar = 0

    def element(self, n: int, fld: Field = RATIONAL) -> Scalar:
        if n < 1:
            raise ValueError("the asymptotic model is defined for n >= 1")
        c = fld.convert
        nn = c(n)
        return c(self.limit) + c(self.z) ** (n + 1) * nn ** self.theta * (c(self.a0) + c(self.a1) / nn + c(self.a2) / nn ** 2)

    def remainder(self, n: int, fld: Field = RATIONAL) -> Scalar:
        return self.element(n, fld) - fld.convert(self.limit)


def generate(spec, count: int, start: Optional[int] = None, field: Field = RATIONAL) -> Sequence:
    """Elements s_start..s_{start+count-1} of a model sequence.

    ``start`` defaults to the first index where the model is defined (1 for
    the asymptotic model).
    """
    if start is None:
        if isinstance(spec, AsyModel):
            start = 1
        elif isinstance(spec, ModelSequence):
            start = spec.first_valid_index()
        else:
            start = 0
    return Sequence(tuple(spec.element(n, field) for n in range(start, start + count)), None, start)


# -- reference problems -----------------------------------------------------------


def euler_integral(z: float = 1.0) -> tuple[float, float]:
    """int_0^oo e^-t / (1 + z t) dt by adaptive quadrature: (value, error estimate)."""
    val, err = integrate.quad(lambda t: math.exp(-t) / (1.0 + z * t), 0.0, math.inf, epsabs=1e-14, epsrel=1e-13)
    if not err <= 1e-12:
        raise ArithmeticError(f"quadrature did not reach the requested accuracy (estimate {err:.2e})")
    return val, err


@dataclass(frozen=True)
class ReferenceProblem:
    """A named series given by its terms a_n or its coefficients gamma_n.

    ``kind`` is ``series`` (terms a_n, partial sums s_n) or ``coefficients``
    (power-series gamma_n, for the rational approximant tools).
    """

    name: str
    rule: Callable[[int], Scalar]
    classification: str
    description: str
    kind: str = "series"
    oracle: Optional[Callable[[], float]] = dc_field(default=None, compare=False)

    def terms(self, count: int, field: Field = RATIONAL) -> list:
        return [field.convert(self.rule(n)) for n in range(count)]

    def sequence(self, count: int, field: Field = RATIONAL) -> Sequence:
        return Sequence.from_terms(self.terms(count, field))


def _euler_term(n: int) -> int:
    return (-1) ** n * math.factorial(n)


def _log1p_coeff(n: int) -> Fraction:
    return Fraction(0) if n == 0 else Fraction((-1) ** (n + 1), n)


PROBLEMS = {
    p.name: p for p in (
        ReferenceProblem("ln2", lambda n: Fraction((-1) ** n, n + 1), "alternating",
                         "sum (-1)^n/(n+1) = ln 2", oracle=lambda: math.log(2)),
        ReferenceProblem("zeta2", lambda n: Fraction(1, (n + 1) ** 2), "logarithmic",
                         "sum 1/(n+1)^2 = pi^2/6", oracle=lambda: math.pi ** 2 / 6),
        ReferenceProblem("euler-z1", _euler_term, "alternating-divergent",
                         "sum (-1)^n n! (Euler series at z=1)", oracle=lambda: euler_integral(1.0)[0]),
        ReferenceProblem("geometric-half", lambda n: Fraction(1, 2 ** n), "linear",
                         "sum 2^-n = 2", oracle=lambda: 2.0),
        ReferenceProblem("exp", lambda n: Fraction(1, math.factorial(n)), "linear",
                         "exp(z) coefficients 1/n!", kind="coefficients"),
        ReferenceProblem("geometric", lambda n: Fraction(1), "linear",
                         "1/(1-z) coefficients", kind="coefficients"),
        ReferenceProblem("log1p", _log1p_coeff, "logarithmic",
                         "ln(1+z) coefficients (gamma_0 = 0)", kind="coefficients"),
        ReferenceProblem("log1p-over-z", lambda n: Fraction((-1) ** n, n + 1), "logarithmic",
                         "ln(1+z)/z coefficients", kind="coefficients"),
        ReferenceProblem("euler", _euler_term, "alternating-divergent",
                         "Euler series coefficients (-1)^n n!", kind="coefficients"),
    )
}


def problem(name: str) -> ReferenceProblem:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise KeyError(f"unknown problem {name!r}; known: {', '.join(sorted(PROBLEMS))}") from None


def oracle_value(p: ReferenceProblem | str) -> float:
    """Reference value computed without any sequence transformation."""
    if isinstance(p, str):
        p = problem(p)
    if p.oracle is None:
        raise LookupError(f"problem {p.name!r} has no reference value")
    return p.oracle()


__all__ = [
    "AsyModel", "ModelSequence", "PROBLEMS", "ReferenceProblem", "RichardsonModel", "c_model",
    "euler_integral", "factorial_model", "g_model", "generate", "levin_model", "m_model", "oracle_value",
    "problem",
]
