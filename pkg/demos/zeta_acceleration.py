"""Logarithmic convergence: the partial sums of sum 1/(n+1)^2.

Levin's u transformation turns 25 terms, off in the second digit, into a
value correct to ten.  In double precision the highest orders lose digits to
cancellation, so we also show where successive orders agree best and what
exact rational arithmetic gives.
"""

import math

from levintype import corpus, engine, richardson
from levintype.estimates import u_estimator
from levintype.numeric import FLOAT, RATIONAL

ref = math.pi ** 2 / 6
s = corpus.problem("zeta2").sequence(25, FLOAT)
print(f"s_24 = {s.s(24):.12f}   error {ref - s.s(24):.2e}")

table = engine.levin_L(1, s, u_estimator())
for k in (4, 8, 12, 16, 20, 24):
    print(f"L_u k={k:2d}  {table.value(k, 0):.15f}  error {abs(table.value(k, 0) - ref):.1e}")

k, value, _ = table.stable()
print(f"\nstable order k={k}: error {abs(value - ref):.1e}")

exact = engine.levin_L(1, corpus.problem("zeta2").sequence(25, RATIONAL), u_estimator())
print(f"exact arithmetic, k=24: error {abs(float(exact.value(24, 0)) - ref):.1e}")

# Richardson extrapolation in x_n = 1/(n+1) for comparison
lam = richardson.lambda_recursive(1, s, 12)
print(f"Richardson k=12: error {abs(lam.value(12, 0) - ref):.1e}")
