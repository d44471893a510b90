#!/usr/bin/env python3
"""Where a space sits in the metric hierarchy.

The bundled four-point family (0, 1/5, 1/9, 1/16 plus a sampled copy of
[1/2, 1]) separates the axioms: the same distance table violates the
triangle, the relaxed triangle at s = 3, and the four-point inequality at
s = 1, yet satisfies the four-point inequality once the coefficient 3 is
allowed.  Every verdict below is an exact rational comparison.
"""

from fractions import Fraction as F

from fprect import (
    check_b_rectangular,
    check_b_triangle,
    check_rectangular,
    check_triangle,
)
from fprect import reference

space = reference.main_space()
print(f"space: {len(space)} points, fallback = squared difference")
print(f"labels: {', '.join(space.labels())}\n")

for name, report in [
    ("triangle", check_triangle(space, witness_cap=3)),
    ("b-triangle, s = 3", check_b_triangle(space, F(3), witness_cap=3)),
    ("rectangular", check_rectangular(space, witness_cap=3)),
    ("b-rectangular, s = 3", check_b_rectangular(space, F(3), witness_cap=3)),
]:
    verdict = "holds" if report.verdict else "FAILS"
    print(f"{name:<22} {verdict}  ({report.total_violations} violations)")
    for w in report.witnesses[:2]:
        path = " -> ".join(w.labels)
        print(f"    witness {path}:  {w.lhs} > {w.rhs}")
print()

print("The classical separation triple lives in the four rationals:")
core = reference.main_space_core_only()
tri = check_triangle(core, witness_cap=None)
for w in tri.witnesses:
    if w.labels == ("1/5", "1/16", "1/9"):
        print(f"  d(1/5, 1/9) = {w.lhs} exceeds the detour bound {w.rhs}")
