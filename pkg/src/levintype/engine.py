"""The G_k^(n)(q_m, s_n, omega_n) family and its special cases L, S, M and C.

Two independent routes compute the same numbers:

* :func:`g_explicit` evaluates the normalized ratio of binomial sums
  directly, with weights prod_{m=1}^{k-1} (n+j+q_m)/(n+k+q_m);
* :func:`g_recursive_table` runs the three-term recursion for the normalized
  numerator and denominator tables, which is what :func:`transform` uses.

The dedicated recursions for L, S, M and C are kept as separate functions so
tests can check them against the general scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional, Sequence as _Seq

from . import schedules as sch
from .estimates import EstimateError, RemainderEstimator, t_as_d_rewrite
from .numeric import Field, Scalar, SingularError, binomial_row, infer_field, pochhammer
from .schedules import QSchedule, ScheduleError
from .sequence import Sequence

Rows = list  # rows[k][i] holds the entry for index n = start + i


def _lookup(omega, start: int) -> Callable[[int], Scalar]:
    if callable(omega):
        return omega
    if isinstance(omega, dict):
        return omega.__getitem__

    def get(n):
        if not 0 <= n - start < len(omega):
            raise IndexError(f"omega_{n} not available")
        return omega[n - start]
    return get


# -- explicit sums -----------------------------------------------------------


def g_weights(k: int, n: int, q: QSchedule, fld: Field) -> list:
    """(-1)^j C(k,j) prod_{m=1}^{k-1} (n+j+q_m)/(n+k+q_m) for j = 0..k."""
    out = []
    for j, c in enumerate(binomial_row(k)):
        w = fld.convert(c)
        for m in range(1, k):
            w = w * fld.ratio(n + j + q.q(m), n + k + q.q(m))
        out.append(w if j % 2 == 0 else -w)
    return out


def g_explicit_parts(k: int, n: int, q: QSchedule, s: Sequence, omega, field: Optional[Field] = None):
    """Normalized numerator and denominator sums of G_k^(n)."""
    fld = field or s.field
    q = q.converted(fld)
    om = _lookup(omega, s.start)
    num = den = fld.convert(0)
    for j, w in enumerate(g_weights(k, n, q, fld)):
        wj = om(n + j)
        if wj == 0:
            raise EstimateError(f"omega_{n + j} is zero", n + j)
        num = num + w * s.s(n + j) / wj
        den = den + w / wj
    return num, den


def g_explicit(k: int, n: int, q: QSchedule, s: Sequence, omega, field: Optional[Field] = None) -> Scalar:
    """G_k^(n)(q_m, s_n, omega_n) from its explicit ratio of finite sums."""
    num, den = g_explicit_parts(k, n, q, s, omega, field)
    if den == 0:
        raise SingularError(f"denominator of G_{k}^({n}) vanishes")
    return num / den


# -- recursions --------------------------------------------------------------


def _difference_rows(u: _Seq, k_max: int, start: int, factor) -> Rows:
    """Shared driver: row k+1 = row_k(n+1) - factor(k, n) row_k(n)."""
    rows = [list(u)]
    for k in range(0, k_max):
        prev = rows[-1]
        if len(prev) < 2:
            break
        nxt = []
        for i in range(len(prev) - 1):
            n = start + i
            f = factor(k, n)
            nxt.append(prev[i + 1] - f * prev[i])
        rows.append(nxt)
    return rows


def g_recursive_table(q: QSchedule, u: _Seq, k_max: int, start: int = 0, field: Optional[Field] = None) -> Rows:
    """Normalized tables G_k^(n) from u_start, u_start+1, ...

    G_0 = u_n, G_1 = u_{n+1} - u_n and for k >= 1

        G_{k+1}^(n) = G_k^(n+1) - (n+q_k)/(n+k+q_k+1)
                      * prod_{m=1}^{k-1} (n+k+q_m)/(n+k+q_m+1) * G_k^(n).

    With u_n = s_n/omega_n this gives the numerators of the normalized ratio up
    to the common sign (-1)^k, with u_n = 1/omega_n the denominators.
    """
    fld = field or infer_field(u)
    q = q.converted(fld)
    k_max = min(k_max, len(u) - 1)
    q.validate_window(k_max, start, start + len(u) - 1)

    def factor(k, n):
        if k == 0:
            return 1
        f = fld.ratio(n + q.q(k), n + k + q.q(k) + 1)
        for m in range(1, k):
            f = f * fld.ratio(n + k + q.q(m), n + k + q.q(m) + 1)
        return f

    return _difference_rows(u, k_max, start, factor)


def levin_recursive_table(beta: Scalar, u: _Seq, k_max: int, start: int = 0, field: Optional[Field] = None) -> Rows:
    """L_{k+1}^(n) = L_k^(n+1) - (b+n)(b+n+k)^(k-1)/(b+n+k+1)^k L_k^(n)."""
    fld = field or infer_field(u)
    b = fld.convert(beta)

    def factor(k, n):
        if k == 0:
            return 1
        return (b + n) * (b + n + k) ** (k - 1) / (b + n + k + 1) ** k

    return _difference_rows(u, min(k_max, len(u) - 1), start, factor)


def weniger_recursive_table(beta: Scalar, u: _Seq, k_max: int, start: int = 0, field: Optional[Field] = None) -> Rows:
    """S_{k+1}^(n) = S_k^(n+1) - (b+n+k-1)(b+n+k)/((b+n+2k-1)(b+n+2k)) S_k^(n).

    At k = 0 the factor is 1 (it reads 0/0 when b + n = 1).
    """
    fld = field or infer_field(u)
    b = fld.convert(beta)

    def factor(k, n):
        if k == 0:
            return 1
        return (b + n + k - 1) * (b + n + k) / ((b + n + 2 * k - 1) * (b + n + 2 * k))

    return _difference_rows(u, min(k_max, len(u) - 1), start, factor)


def m_recursive_table(xi: Scalar, u: _Seq, k_max: int, start: int = 0, field: Optional[Field] = None) -> Rows:
    """M_{k+1}^(n) = M_k^(n+1) - (x+n-k+1)/(x+n+k+1) M_k^(n)."""
    fld = field or infer_field(u)
    x = fld.convert(xi)

    def factor(k, n):
        return (x + n - k + 1) / (x + n + k + 1)

    return _difference_rows(u, min(k_max, len(u) - 1), start, factor)


def c_recursive_table(alpha: Scalar, beta: Scalar, u: _Seq, k_max: int, start: int = 0,
                      field: Optional[Field] = None) -> Rows:
    """C_1 = Delta u and for k >= 1

        C_{k+1}^(n) = C_k^(n+1)
            - (a(b+n) + k - 1) (a(b+n+k))_{k-1} / (a(b+n+k+1))_k * C_k^(n).
    """
    fld = field or infer_field(u)
    a, b = fld.convert(alpha), fld.convert(beta)

    def factor(k, n):
        if k == 0:
            return 1
        return (a * (b + n) + k - 1) * pochhammer(a * (b + n + k), k - 1) / pochhammer(a * (b + n + k + 1), k)

    return _difference_rows(u, min(k_max, len(u) - 1), start, factor)


def _general(schedule, u, k_max, start, field):
    return g_recursive_table(schedule, u, k_max, start, field)


def _levin(schedule, u, k_max, start, field):
    return levin_recursive_table(schedule.q(1), u, k_max, start, field)


def _weniger(schedule, u, k_max, start, field):
    return weniger_recursive_table(schedule.q(1), u, k_max, start, field)


def _m(schedule, u, k_max, start, field):
    schedule.validate_window(k_max, start, start + len(u) - 1)
    return m_recursive_table(schedule.q(1), u, k_max, start, field)


def _c(schedule, u, k_max, start, field):
    return c_recursive_table(schedule.params[0], schedule.q(1), u, k_max, start, field)


DEDICATED = {"constant": _levin, "factorial": _weniger, "reverse": _m, "interpolating": _c}


# -- tables ------------------------------------------------------------------


@dataclass
class TransformTable:
    """Triangular table of a transformation run.

    ``values[k][i]`` is T_k^(n) with n = start + i.  Entries whose normalized
    denominator is (numerically) zero are kept but flagged invalid, and their
    value is ``None``.
    """

    start: int
    numerators: Rows
    denominators: Rows
    values: Rows
    valid: Rows
    field: Field
    meta: dict = dc_field(default_factory=dict)

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def _idx(self, k: int, n: int) -> int:
        i = n - self.start
        if not (0 <= k < len(self.values) and 0 <= i < len(self.values[k])):
            raise IndexError(f"no entry T_{k}^({n}) in this table")
        return i

    def value(self, k: int, n: int) -> Scalar:
        i = self._idx(k, n)
        if not self.valid[k][i]:
            raise SingularError(f"entry T_{k}^({n}) has a vanishing denominator")
        return self.values[k][i]

    def is_valid(self, k: int, n: int) -> bool:
        return self.valid[k][self._idx(k, n)]

    def column(self, n: int) -> list:
        """T_0^(n), T_1^(n), ... as far as the window allows (None where invalid)."""
        i = n - self.start
        return [row[i] if self.valid[k][i] else None for k, row in enumerate(self.values) if i < len(row)]

    def row(self, k: int) -> list:
        return [v if ok else None for v, ok in zip(self.values[k], self.valid[k])]

    def recommended(self, n: Optional[int] = None):
        """(k, value, error estimate) for the highest valid order in column n.

        The error estimate is |T_K^(n) - T_K'^(n)| for the two highest valid
        orders K' < K; it is a heuristic, not a bound.
        """
        n = self.start if n is None else n
        col = self.column(n)
        valid = [(k, v) for k, v in enumerate(col) if v is not None]
        if not valid:
            raise SingularError(f"column n={n} has no valid entry")
        k, v = valid[-1]
        err = abs(v - valid[-2][1]) if len(valid) > 1 else None
        return k, v, err

    def stable(self, n: Optional[int] = None):
        """(k, value, error estimate) at the order where successive entries agree best.

        Picks the valid order K >= 2 minimizing |T_K^(n) - T_K'^(n)| with K' the
        previous valid order.  In floating point the highest orders of a
        logarithmically convergent input are often spoiled by cancellation;
        this choice sidesteps them.
        """
        n = self.start if n is None else n
        valid = [(k, v) for k, v in enumerate(self.column(n)) if v is not None]
        if len(valid) < 3:
            return self.recommended(n)
        best = min(range(2, len(valid)), key=lambda i: (abs(valid[i][1] - valid[i - 1][1]), -i))
        k, v = valid[best]
        return k, v, abs(v - valid[best - 1][1])

    def __iter__(self):
        for k, row in enumerate(self.values):
            for i, v in enumerate(row):
                yield k, self.start + i, v, self.valid[k][i]


def _window(s: Sequence, lookahead: int, k_max: Optional[int]):
    n_last = s.last - lookahead
    if n_last < s.start:
        raise ValueError(f"need at least {lookahead + 1} sequence elements for this estimator")
    top = n_last - s.start
    return n_last, top if k_max is None else min(k_max, top)


def _build(fld, start, num_rows, den_rows, scales, meta) -> TransformTable:
    values, valid = [], []
    for k, (nr, dr) in enumerate(zip(num_rows, den_rows)):
        vrow, okrow = [], []
        for i, (a, b) in enumerate(zip(nr, dr)):
            scale = max(scales[i:i + k + 1])
            ok = not fld.is_zero(b, scale)
            vrow.append(a / b if ok else None)
            okrow.append(ok)
        values.append(vrow)
        valid.append(okrow)
    return TransformTable(start, num_rows, den_rows, values, valid, fld, meta)


def _omegas(estimator: RemainderEstimator, s: Sequence, schedule: QSchedule, first: int, last: int) -> list:
    cache = {}
    for n in range(first, last + 1):
        if n not in cache:
            cache[n] = estimator.omega(s, n, schedule)
    return [cache[n] for n in range(first, last + 1)]


def transform(q: QSchedule, s: Sequence, estimator: RemainderEstimator, k_max: Optional[int] = None,
              field: Optional[Field] = None, recursion: Optional[Callable] = None,
              family: str = "G") -> TransformTable:
    """Fill numerator, denominator and value tables of G_k^(n)(q_m, s_n, omega_n).

    With N+1 elements s_start..s_N the table holds entries with
    n + k <= N (u, t, explicit) or n + k <= N - 1 (d, v).  Plain t estimators
    are evaluated through the equivalent d variant with q_m + 1 on the shifted
    sequence; row 0 is s_n itself.
    """
    fld = field or s.field
    s = s.converted(fld)
    q = q.converted(fld)
    rec = recursion or _general
    meta = {"family": family, "schedule": q.label(), "estimator": estimator.label(), "field": fld.name}

    if estimator.kind == "t" and not estimator.asymptotic:
        n_last, top = _window(s, 0, k_max)
        rw = t_as_d_rewrite(q, s)
        inner = transform(rw.schedule, rw.sequence, RemainderEstimator("d"), top, fld, recursion, family)
        # inner column n-1 is the t column n, for orders k >= 1
        width = n_last - s.start + 1
        num = [[fld.convert(v) for v in s.values[:width]]]
        den = [[fld.convert(1)] * width]
        vals, ok = [num[0]], [[True] * width]
        for k in range(1, top + 1):
            num.append(inner.numerators[k][: width - k])
            den.append(inner.denominators[k][: width - k])
            vals.append(inner.values[k][: width - k])
            ok.append(inner.valid[k][: width - k])
        meta["via"] = "d-rewrite"
        return TransformTable(s.start, num, den, vals, ok, fld, meta)

    n_last, top = _window(s, estimator.lookahead, k_max)
    omegas = _omegas(estimator, s, q, s.start, n_last)
    u_num = [s.s(n) / w for n, w in zip(range(s.start, n_last + 1), omegas)]
    u_den = [fld.convert(1) / w for w in omegas]
    q.validate_window(top, s.start, n_last)
    num = rec(q, u_num, top, s.start, fld)
    den = rec(q, u_den, top, s.start, fld)
    num = [row[: n_last - s.start - k + 1] for k, row in enumerate(num[: top + 1])]
    den = [row[: n_last - s.start - k + 1] for k, row in enumerate(den[: top + 1])]
    scales = [abs(x) for x in u_den]
    return _build(fld, s.start, num, den, scales, meta)


# -- named members of the family ---------------------------------------------


def _family(q, s, estimator, k_max, dedicated, field, name):
    rec = DEDICATED[q.kind] if dedicated else None
    return transform(q, s, estimator, k_max, field, rec, name)


def levin_L(beta: Scalar, s: Sequence, estimator: RemainderEstimator, k_max: Optional[int] = None,
            dedicated: bool = False, field: Optional[Field] = None) -> TransformTable:
    """Levin's transformation: q_m = beta."""
    return _family(sch.constant(beta), s, estimator, k_max, dedicated, field, "L")


def weniger_S(beta: Scalar, s: Sequence, estimator: RemainderEstimator, k_max: Optional[int] = None,
              dedicated: bool = False, field: Optional[Field] = None) -> TransformTable:
    """Factorial-series transformation S: q_m = beta + m - 1 (delta with the d estimator)."""
    return _family(sch.factorial_shift(beta), s, estimator, k_max, dedicated, field, "S")


def transform_M(xi: Scalar, s: Sequence, estimator: RemainderEstimator, k_max: Optional[int] = None,
                dedicated: bool = False, field: Optional[Field] = None) -> TransformTable:
    """q_m = xi - m + 1."""
    return _family(sch.reverse_shift(xi), s, estimator, k_max, dedicated, field, "M")


def transform_C(alpha: Scalar, beta: Scalar, s: Sequence, estimator: RemainderEstimator,
                k_max: Optional[int] = None, dedicated: bool = False,
                field: Optional[Field] = None) -> TransformTable:
    """q_m = beta + (m - 1)/alpha, between S (alpha = 1) and L (alpha -> oo)."""
    return _family(sch.interpolating(alpha, beta), s, estimator, k_max, dedicated, field, "C")


def transform_G(q: QSchedule, s: Sequence, estimator: RemainderEstimator, k_max: Optional[int] = None,
                field: Optional[Field] = None) -> TransformTable:
    return transform(q, s, estimator, k_max, field, None, "G")


__all__ = [
    "DEDICATED", "ScheduleError", "TransformTable", "c_recursive_table", "g_explicit", "g_explicit_parts",
    "g_recursive_table", "g_weights", "levin_L", "levin_recursive_table", "m_recursive_table", "transform",
    "transform_C", "transform_G", "transform_M", "weniger_S", "weniger_recursive_table",
]
