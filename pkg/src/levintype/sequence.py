"""Input sequences s_n, optionally backed by their series terms a_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .numeric import Field, Scalar, infer_field


@dataclass(frozen=True)
class Sequence:
    """Elements s_start, s_start+1, ... of a sequence.

    Indices are absolute: ``s(n)`` is the element with index ``n``.  Elements
    with negative index that are not stored are zero (partial sums of a series
    starting at a_0).  When ``terms`` is given, ``terms[i]`` is a_{start+i}
    with s_n - s_{n-1} = a_n.
    """

    values: tuple
    terms: Optional[tuple] = None
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.terms is not None:
            object.__setattr__(self, "terms", tuple(self.terms))
            if len(self.terms) != len(self.values):
                raise ValueError("terms and values must have the same length")
        if not self.values:
            raise ValueError("a sequence needs at least one element")

    @classmethod
    def from_terms(cls, terms: Iterable[Scalar], start: int = 0, initial: Scalar = 0) -> "Sequence":
        """Partial sums s_n = initial + a_start + ... + a_n."""
        terms = tuple(terms)
        sums, acc = [], initial
        for a in terms:
            acc = acc + a
            sums.append(acc)
        return cls(tuple(sums), terms, start)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last(self) -> int:
        return self.start + len(self.values) - 1

    @property
    def field(self) -> Field:
        return infer_field(self.values + (self.terms or ()))

    def s(self, n: int) -> Scalar:
        if self.start <= n <= self.last:
            return self.values[n - self.start]
        if n < 0 and n < self.start:
            return 0
        raise IndexError(f"s_{n} is outside the stored window {self.start}..{self.last}")

    def a(self, n: int) -> Scalar:
        """Term a_n = s_n - s_{n-1}."""
        if self.terms is not None and self.start <= n <= self.last:
            return self.terms[n - self.start]
        return self.s(n) - self.s(n - 1)

    def map(self, fn) -> "Sequence":
        return Sequence(tuple(fn(v) for v in self.values),
                        None if self.terms is None else tuple(fn(v) for v in self.terms),
                        self.start)

    def converted(self, field: Field) -> "Sequence":
        return self.map(field.convert)

    def plus(self, c: Scalar) -> "Sequence":
        """s_n + c; terms are unchanged except the first one."""
        terms = None
        if self.terms is not None:
            terms = (self.terms[0] + c,) + self.terms[1:] if self.start <= 0 else self.terms
        return Sequence(tuple(v + c for v in self.values), terms, self.start)

    def truncated(self, count: int) -> "Sequence":
        return Sequence(self.values[:count], None if self.terms is None else self.terms[:count], self.start)

    def prepend_previous(self) -> "Sequence":
        """Same data with s_{start-1} stored as well (needed by the t -> d rewrite).

        Terms are dropped; they are recovered from differences of the stored
        values, which now include s_{start-1}.
        """
        prev = self.s(self.start) - self.a(self.start)
        return Sequence((prev,) + self.values, None, self.start - 1)
