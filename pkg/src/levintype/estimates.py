"""Remainder estimates omega_n built from the input data.

The four simple rules, written with a_n = s_n - s_{n-1}:

    u:  omega_n = (n + q_0) a_n
    t:  omega_n = a_n
    d:  omega_n = a_{n+1}
    v:  omega_n = a_n a_{n+1} / (a_n - a_{n+1})

An ``asymptotic`` estimator applies the same rules to a user supplied term
rule a_n^(oo) instead of the actual terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence as _Seq

from .numeric import Scalar
from .schedules import QSchedule
from .sequence import Sequence

KINDS = ("u", "t", "d", "v", "explicit")


class EstimateError(ArithmeticError):
    """A remainder estimate vanished (or its v-rule divisor did)."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class RemainderEstimator:
    kind: str
    q0: Optional[Scalar] = None
    omega_values: Optional[tuple] = None
    omega_start: int = 0
    rule: Optional[Callable[[int], Scalar]] = field(default=None, compare=False)
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown estimator kind {self.kind!r}")
        if self.kind == "explicit" and self.omega_values is None and self.rule is None:
            raise ValueError("explicit estimator needs omega values or a rule")

    @property
    def lookahead(self) -> int:
        return 1 if self.kind in ("d", "v") else 0

    @property
    def asymptotic(self) -> bool:
        return self.kind != "explicit" and self.rule is not None

    def label(self) -> str:
        if self.name:
            return self.name
        tag = self.kind
        if self.asymptotic:
            tag += "-asymptotic"
        if self.kind == "u" and self.q0 is not None:
            tag += f"(q0={self.q0})"
        return tag

    def omega(self, s: Sequence, n: int, schedule: Optional[QSchedule] = None) -> Scalar:
        """omega_n for sequence ``s``; raises EstimateError if it vanishes."""
        if self.kind == "explicit":
            if self.rule is not None:
                w = self.rule(n)
            else:
                idx = n - self.omega_start
                if not 0 <= idx < len(self.omega_values):
                    raise IndexError(f"no explicit omega_{n}")
                w = self.omega_values[idx]
        else:
            term = self.rule if self.rule is not None else s.a
            q0 = self.q0
            if self.kind == "u" and q0 is None:
                q0 = schedule.q(1) if schedule is not None else 1
            w = simple_estimate(self.kind, term, n, q0)
        if w == 0:
            raise EstimateError(f"remainder estimate omega_{n} is zero", n)
        return w


def simple_estimate(kind: str, term: Callable[[int], Scalar], n: int, q0: Scalar = 1) -> Scalar:
    """Apply one of the u/t/d/v rules to the term function ``term``."""
    if kind == "u":
        return (n + q0) * term(n)
    if kind == "t":
        return term(n)
    if kind == "d":
        return term(n + 1)
    if kind == "v":
        an, an1 = term(n), term(n + 1)
        diff = an - an1
        if diff == 0:
            raise EstimateError(f"v estimate undefined: a_{n} = a_{n + 1}", n)
        return an * an1 / diff
    raise ValueError(f"no simple rule for kind {kind!r}")


def estimate(kind: str, s: Sequence, n: int, q0: Scalar = 1) -> Scalar:
    """Single estimate omega_n of the given kind from the terms of ``s``."""
    w = simple_estimate(kind, s.a, n, q0)
    if w == 0:
        raise EstimateError(f"remainder estimate omega_{n} is zero", n)
    return w


# -- constructors ------------------------------------------------------------


def u_estimator(q0: Optional[Scalar] = None) -> RemainderEstimator:
    """(n + q0) a_n; q0 defaults to q_1 of the schedule in use."""
    return RemainderEstimator("u", q0=q0)


def t_estimator() -> RemainderEstimator:
    return RemainderEstimator("t")


def d_estimator() -> RemainderEstimator:
    return RemainderEstimator("d")


def v_estimator() -> RemainderEstimator:
    return RemainderEstimator("v")


def explicit_omega(values: _Seq[Scalar] | Callable[[int], Scalar], start: int = 0) -> RemainderEstimator:
    if callable(values):
        return RemainderEstimator("explicit", rule=values)
    return RemainderEstimator("explicit", omega_values=tuple(values), omega_start=start)


def asymptotic_estimator(kind: str, term_rule: Callable[[int], Scalar], q0: Optional[Scalar] = None) -> RemainderEstimator:
    """Simple rule ``kind`` applied to the asymptotic terms a_n^(oo) = term_rule(n)."""
    if kind not in ("u", "t", "d", "v"):
        raise ValueError("asymptotic estimates exist for kinds u, t, d, v")
    return RemainderEstimator(kind, q0=q0, rule=term_rule)


def estimator_named(kind: str, q0: Optional[Scalar] = None) -> RemainderEstimator:
    if kind == "u":
        return u_estimator(q0)
    return {"t": t_estimator, "d": d_estimator, "v": v_estimator}[kind]()


def asymptotic_estimate(kind: str, gamma_inf: Callable[[int], Scalar], z: Scalar, n: int,
                        q0: Scalar = 1) -> Scalar:
    """Power-series form: the rules with a_n^(oo) = gamma_n^(oo) z^n.

    For example the d kind gives omega_n = gamma_{n+1}^(oo) z^(n+1).
    """
    w = simple_estimate(kind, lambda m: gamma_inf(m) * z ** m, n, q0)
    if w == 0:
        raise EstimateError(f"asymptotic estimate omega_{n} is zero", n)
    return w


def factorial_growth(R: Scalar = 1, a: int = 1, b: int = 1, alternating: bool = False) -> Callable[[int], Scalar]:
    """Rule n -> (+-1)^n Gamma(a n + b) R^n, exact for integer a and b."""
    def rule(n: int) -> Scalar:
        g = math.factorial(a * n + b - 1)
        val = g * R ** n
        return -val if alternating and n % 2 else val
    return rule


# -- t variants are d variants in disguise -----------------------------------


@dataclass(frozen=True)
class TDRewrite:
    """Reparameterized input for evaluating a t variant as a d variant.

    ``t_k^(n)(q, s) = d_k^(n + index_shift)(schedule, sequence)`` for k >= 1,
    where ``schedule`` is q_m + 1 and ``sequence`` also stores s_{n-1}.
    """

    schedule: QSchedule
    sequence: Sequence
    index_shift: int = -1


def t_as_d_rewrite(schedule: QSchedule, s: Sequence) -> TDRewrite:
    """Shift q_m -> q_m + 1 and expose s_{start-1} (zero for start 0).

    For the n = 0 column the shifted d sum runs over index -1, where
    s_{-1} = 0, so its j = 0 numerator term drops out on its own.
    """
    return TDRewrite(schedule.shifted(1), s.prepend_previous(), -1)


__all__ = [
    "EstimateError", "RemainderEstimator", "TDRewrite", "asymptotic_estimate", "asymptotic_estimator",
    "d_estimator", "estimate", "estimator_named", "explicit_omega", "factorial_growth",
    "simple_estimate", "t_as_d_rewrite", "t_estimator", "u_estimator", "v_estimator",
]
