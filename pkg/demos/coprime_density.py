#!/usr/bin/env python3
"""How fast does the coprime-pair density 6/pi^2 emerge?

Two views: the partial sums of mu(d)/d^2, and the measured fraction of
coprime pairs in growing square boxes.
"""

import math

from visiblepoints import COPRIME_DENSITY, zeta2_inverse_partial

print(f"target density 6/pi^2 = {COPRIME_DENSITY:.10f}\n")

print("partial sums of mu(d)/d^2:")
for D in (1, 2, 5, 10, 100, 1000, 10**5):
    s = zeta2_inverse_partial(D)
    print(f"  D = {D:>7}:  {s:.10f}   error {s - COPRIME_DENSITY:+.2e}")

print("\ncoprime fraction in an n x n box:")
for n in (10, 50, 200, 1000):
    count = sum(
        1 for x in range(1, n + 1) for y in range(1, n + 1) if math.gcd(x, y) == 1
    )
    frac = count / n**2
    print(f"  n = {n:>5}:  {count:>8} pairs, fraction {frac:.6f} "
          f"(error {frac - COPRIME_DENSITY:+.2e})")

print("\nBoth columns converge to the same constant; the box fraction has a")
print("boundary term of order log(n)/n on top of the density.")
