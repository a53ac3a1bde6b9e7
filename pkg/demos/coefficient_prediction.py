"""Predicting unknown Taylor coefficients from a few known ones.

A Levin-type transformation of partial sums of a power series is a rational
function of z.  Its Taylor expansion agrees with the input through a known
order and then continues with guesses for the next coefficients.
"""

import math
from fractions import Fraction

from levintype import corpus, rational
from levintype import schedules as sch

gamma = corpus.problem("exp").terms(6)
for k in (1, 2):
    pred = rational.predict("d", sch.constant(1), k, 0, gamma[:k + 2], count=4)
    a = pred.approximant
    print(f"d variant, k={k}:  P = {list(map(str, a.numerator.coeffs))}  Q = {list(map(str, a.denominator.coeffs))}")
    for i, v in enumerate(pred.values, start=pred.first):
        print(f"  gamma_{i}: predicted {str(v):>10}  true 1/{math.factorial(i)}  rel. error {float(v * math.factorial(i) - 1):+.3f}")

# ln(1+z)/z: the u, t and v rules need a nonzero leading coefficient
gamma = corpus.problem("log1p-over-z").terms(10)
pred = rational.predict("v", sch.factorial_shift(1), 3, 1, gamma[:7], count=3)
print("\nln(1+z)/z, v variant k=3 n=1, matched through", pred.guaranteed - 1)
for i, v in enumerate(pred.values, start=pred.first):
    true = Fraction((-1) ** i, i + 1)
    print(f"  gamma_{i}: predicted {float(v):+.6f}  true {float(true):+.6f}")
