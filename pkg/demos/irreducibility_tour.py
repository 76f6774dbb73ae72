#!/usr/bin/env python3
"""Absolute-irreducibility verdicts on the classified families.

A polynomial can be irreducible over F_p yet split over a small extension;
the verdict reports both layers and, when splitting happens, the extension
degree at which it occurs (or a base-field factor).
"""

from visiblepoints import (
    ExtensionField,
    bad_level_values,
    is_absolutely_irreducible,
    is_irreducible_bivariate,
    parse_poly,
    reduce_mod,
)

cases = [
    ("U*V", 7),
    ("U*V - 3", 7),
    ("U^2 + V^2", 5),
    ("U^2 + V^2", 7),
    ("V - U^2", 13),
    ("V^2 - U^3 - U - 1", 101),
]

print("verdicts (f, p -> base / absolute / witness):")
for text, p in cases:
    v = is_absolutely_irreducible(reduce_mod(parse_poly(text), p))
    print(f"  {text:>20} mod {p:>3}:  base={v.irreducible_over_base!s:5}  "
          f"abs={v.absolutely_irreducible!s:5}  witness={v.witness}")

print("\nU^2 + V^2 mod 7 splits over F_49 where sqrt(-1) lives:")
fm = reduce_mod(parse_poly("U^2 + V^2"), 7)
print("  irreducible over F_7: ", is_irreducible_bivariate(fm, ExtensionField(7, 1)))
print("  irreducible over F_49:", is_irreducible_bivariate(fm, ExtensionField(7, 2)))

print("\nbad level sets {a : f - a loses absolute irreducibility}:")
for text, ps in (("U*V", (5, 11, 101, 1009)), ("V - U^2", (13,)),
                 ("V^2 - U^3 - U - 1", (101,))):
    f = parse_poly(text)
    for p in ps:
        bad = sorted(bad_level_values(f, p))
        print(f"  {text:>20} mod {p:>4}: {bad}")
print("\nThe hyperbola's bad set is always {0}, independent of p: a size")
print("bound depending only on the degree, never on the prime.")
