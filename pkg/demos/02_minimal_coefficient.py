#!/usr/bin/env python3
"""Finding the tightest four-point coefficient.

minimal_b_rect_s maximizes d(x, y) / (d(x, u) + d(u, v) + d(v, y)) over
all quadruples of distinct points.  The returned rational is sharp: the
inequality holds there and fails one binary notch below.
"""

from fractions import Fraction as F

from fprect import check_b_rectangular, generate_random_space, minimal_b_rect_s
from fprect import reference

core = reference.main_space_core_only()
s_core = minimal_b_rect_s(core)
print(f"four rationals only:          s* = {s_core}")

full = reference.main_space()
s_full = minimal_b_rect_s(full)
print(f"with the sampled interval:    s* = {s_full}")
print("  (equally spaced grid points under the squared-difference fallback")
print("   realize the worst ratio, which is why the coefficient rises to 3)")

probe = s_full * (1 - F(1, 2 ** 20))
print(f"\ntightness probe at s* and s* - epsilon:")
print(f"  at {s_full}: {check_b_rectangular(full, s_full).verdict}")
print(f"  at {probe}: {check_b_rectangular(full, probe).verdict}")

print("\nsame sharpness on seeded random spaces:")
for seed in range(3):
    space = generate_random_space(6, seed)
    s_star = minimal_b_rect_s(space)
    below = s_star * (1 - F(1, 2 ** 20))
    print(f"  seed {seed}: s* = {s_star}  "
          f"holds at s*: {check_b_rectangular(space, s_star).verdict}  "
          f"fails below: {not check_b_rectangular(space, below).verdict}")
