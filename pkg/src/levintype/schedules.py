"""Parameter families q_m selecting a member of the G transformation family."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence as _Seq

from .numeric import Field, Scalar


class ScheduleError(ValueError):
    """Invalid schedule parameters, or a schedule that zeroes a weight factor."""


class WindowError(ScheduleError):
    """A valid schedule makes some factor n + k + q_m vanish inside the working window."""


@dataclass(frozen=True)
class QSchedule:
    """A rule m -> q_m.

    ``kind`` is one of ``constant``, ``factorial``, ``reverse``,
    ``interpolating``, ``square`` or ``explicit``.  ``shift`` is added to every
    q_m (used by the t -> d rewrite, which needs q_m + 1).
    """

    kind: str
    params: tuple = ()
    values: Optional[tuple] = None
    rule: Optional[Callable[[int], Scalar]] = field(default=None, compare=False)
    shift: Scalar = 0

    def q(self, m: int) -> Scalar:
        return self._base(m) + self.shift

    def _base(self, m: int) -> Scalar:
        k = self.kind
        if k == "constant":
            return self.params[0]
        if k == "factorial":
            return self.params[0] + m - 1
        if k == "reverse":
            return self.params[0] - m + 1
        if k == "interpolating":
            alpha, beta = self.params
            return beta + Fraction(m - 1) / alpha if isinstance(alpha, (int, Fraction)) else beta + (m - 1) / alpha
        if k == "square":
            return m * m
        if k == "explicit":
            if self.rule is not None:
                return self.rule(m)
            offset = self.params[0] if self.params else 1
            idx = m - offset
            if not 0 <= idx < len(self.values):
                raise ScheduleError(f"explicit schedule has no q_{m}")
            return self.values[idx]
        raise ScheduleError(f"unknown schedule kind {k!r}")

    def shifted(self, c: Scalar) -> "QSchedule":
        return QSchedule(self.kind, self.params, self.values, self.rule, self.shift + c)

    def converted(self, fld: Field) -> "QSchedule":
        """Schedule whose q_m are scalars of ``fld`` (keeps exact runs exact)."""
        params = tuple(fld.convert(p) for p in self.params) if self.kind != "explicit" else self.params
        values = None if self.values is None else tuple(fld.convert(v) for v in self.values)
        rule = self.rule
        if rule is not None:
            rule = _converted_rule(rule, fld)
        return QSchedule(self.kind, params, values, rule, fld.convert(self.shift))

    def label(self) -> str:
        p = ",".join(str(x) for x in self.params)
        base = f"{self.kind}({p})" if self.kind != "explicit" else "explicit"
        return base if self.shift == 0 else f"{base}+{self.shift}"

    def validate_window(self, k_max: int, n_first: int, n_last: int) -> None:
        """Reject schedules whose normalization factors n + k + q_m vanish.

        For every order k <= k_max and every n with n + k <= n_last the factors
        n + k + q_m with 1 <= m <= k - 1 divide both the explicit sums and the
        recursion, so none of them may be zero.
        """
        for k in range(2, k_max + 1):
            for n in range(n_first, n_last - k + 1):
                for m in range(1, k):
                    if n + k + self.q(m) == 0:
                        raise WindowError(
                            f"schedule {self.label()} gives n + k + q_m = 0 at n={n}, k={k}, m={m}")


def _converted_rule(rule, fld):
    def converted(m):
        return fld.convert(rule(m))
    return converted


def _positive(name, x):
    if not x > 0:
        raise ScheduleError(f"{name} must be positive, got {x}")
    return x


def constant(beta: Scalar = 1) -> QSchedule:
    """q_m = beta (Levin's transformation)."""
    return QSchedule("constant", (_positive("beta", beta),))


def factorial_shift(beta: Scalar = 1) -> QSchedule:
    """q_m = beta + m - 1 (factorial-series transformation S)."""
    return QSchedule("factorial", (_positive("beta", beta),))


def reverse_shift(xi: Scalar = 1) -> QSchedule:
    """q_m = xi - m + 1 (transformation M)."""
    return QSchedule("reverse", (_positive("xi", xi),))


def interpolating(alpha: Scalar, beta: Scalar = 1) -> QSchedule:
    """q_m = beta + (m - 1)/alpha; alpha = 1 gives S, alpha -> oo gives L."""
    return QSchedule("interpolating", (_positive("alpha", alpha), _positive("beta", beta)))


def square() -> QSchedule:
    """q_m = m**2."""
    return QSchedule("square")


def explicit(values: _Seq[Scalar] | Callable[[int], Scalar], first: int = 1) -> QSchedule:
    """q_m from a list (``values[0]`` is q_first) or from a callable ``m -> q_m``."""
    if callable(values):
        return QSchedule("explicit", (), None, values)
    return QSchedule("explicit", (first,), tuple(values))


def parse_schedule(text: str) -> QSchedule:
    """Parse rule strings such as ``const:1``, ``shift:1``, ``reverse:1``,
    ``interp:2,1``, ``m^2`` or ``list:1,4,9`` (the list starts at q_1)."""
    text = text.strip()
    if text in ("m^2", "m**2", "square"):
        return square()
    kind, _, rest = text.partition(":")
    args = [Fraction(x) for x in rest.split(",") if x.strip()] if rest else []
    try:
        if kind in ("const", "constant"):
            return constant(*args)
        if kind in ("shift", "factorial"):
            return factorial_shift(*args)
        if kind == "reverse":
            return reverse_shift(*args)
        if kind in ("interp", "interpolating"):
            return interpolating(*args)
        if kind == "list":
            return explicit(args)
    except TypeError as exc:
        raise ScheduleError(f"bad parameter count in schedule {text!r}") from exc
    raise ScheduleError(f"unrecognized schedule {text!r}")
