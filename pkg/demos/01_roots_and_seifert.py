#!/usr/bin/env python3
"""Interval roots and the Seifert form.

Positive roots of rank n are integer intervals [lo, hi].  The Seifert form is
non-symmetric: its value on an ordered pair comes from a three-case table, and
symmetrising it recovers the Cartan pairing.
"""
from parkbases import Root, cartan, positive_roots, seifert, support_relation

n = 4
print(f"the {n * (n + 1) // 2} positive roots of rank {n}:")
print(" ", " ".join(str(r) for r in positive_roots(n)))

print("\nSeifert form values on all ordered pairs (rows act first):")
roots = list(positive_roots(n))
header = "        " + " ".join(f"{str(r):>7}" for r in roots)
print(header)
for a in roots:
    row = " ".join(f"{seifert(a, b):>7}" for b in roots)
    print(f"{str(a):>7} {row}")

print("\nthe symmetrisation is the Cartan pairing: 2 on the diagonal,")
print("-1 on adjacent simple roots, 0 on distant ones:")
e = [Root(i, i, n) for i in range(1, n + 1)]
print("  cartan(e1, e1) =", cartan(e[0], e[0]))
print("  cartan(e1, e2) =", cartan(e[0], e[1]))
print("  cartan(e1, e3) =", cartan(e[0], e[2]))

print("\nsupports of two roots are always in one of five relations:")
for a, b in [
    (Root(1, 3, n), Root(2, 2, n)),
    (Root(1, 1, n), Root(3, 3, n)),
    (Root(1, 2, n), Root(2, 3, n)),
]:
    print(f"  {a} vs {b}: {support_relation(a, b)}")
