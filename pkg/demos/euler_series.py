"""Summing the divergent Euler series 1 - 1! + 2! - 3! + ...

The partial sums blow up, yet the delta transformation (S family with the
d remainder estimate) recovers the Stieltjes value 0.59634736...  The quadrature
oracle is computed independently with scipy.
"""

from levintype import corpus, engine
from levintype.estimates import d_estimator
from levintype.numeric import FLOAT

ref = corpus.oracle_value("euler-z1")
s = corpus.problem("euler-z1").sequence(26, FLOAT)
table = engine.weniger_S(1, s, d_estimator())

print(f"reference value {ref:.15f}\n")
print(f"{'k':>3} {'partial sum':>14} {'S_k^(0)':>20} {'abs error':>10}")
for k, value in enumerate(table.column(0)):
    if value is None:
        continue
    print(f"{k:3d} {s.s(k):14.6g} {value:20.15f} {abs(value - ref):10.2e}")

k, value, est = table.recommended()
print(f"\nhighest order k = {k}: {value:.15f}, estimated error {est:.1e}, true error {abs(value - ref):.1e}")
