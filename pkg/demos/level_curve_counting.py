#!/usr/bin/env python3
"""Walk through the counting machinery on the hyperbola x*y = 1 (mod 5)
inside the 5 x 5 box: raw level count, the divisibility-filtered counts
M(d), and the visible count by both routes."""

from visiblepoints import (
    CountBox,
    LevelCurveSpec,
    count_divisible,
    count_level_points,
    count_visible_direct,
    count_visible_mobius,
    expected_visible,
    mobius_sieve,
    parse_poly,
    visible_histogram,
)

f = parse_poly("U*V")
spec = LevelCurveSpec(f, 5, 1)
box = CountBox(5, 5)

print(f"curve: {f.text()} = {spec.a} (mod {spec.p}), box [1,5] x [1,5]\n")

points = [
    (x, y)
    for x in range(1, 6)
    for y in range(1, 6)
    if spec.fmod.evaluate(x, y) == spec.a
]
print("level-curve points:", points)
print("count_level_points:", count_level_points(spec, box))

mu = mobius_sieve(5)
print("\nMoebius assembly of the visible count:")
total = 0
for d in range(1, 6):
    m = count_divisible(spec, box, d)
    total += mu[d] * m
    print(f"  d={d}: mu={mu[d]:+d}  M(d)={m}  running sum {total}")

direct = count_visible_direct(spec, box)
print(f"\ndirect gcd filter: {direct}")
print(f"inclusion-exclusion: {count_visible_mobius(spec, box)}")
print(f"density heuristic 6XY/(pi^2 p): {expected_visible(box, 5):.4f}")

# the same numbers for every level at once
hist = visible_histogram(f, 5, box)
print("\nper-level histogram (a: level count / visible count):")
for a in range(5):
    print(f"  a={a}: {hist.level_counts[a]} / {hist.visible_counts[a]}")
print("level counts sum to 25, visible counts to", hist.total_visible(),
      "(the number of coprime pairs in the box, independent of f)")
