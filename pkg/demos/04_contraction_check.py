#!/usr/bin/env python3
"""Verifying the weakly contractive inequality pair by pair.

The bundled instance: the four-point family with its interval tail, the
map sending the interval to 1/16 and the rationals to 0, psi = 3t/2, a
kinked weight (t, then 2t), control t/16 (t/8 above 1), and the difference
combinator at coefficient s = 3.  All 441 ordered pairs satisfy

    psi(s^2 d(Tx, Ty) + w(Tx) + w(Ty)) <= psi(M) - control(M)

and the checker reproduces the hallmark fractions exactly.
"""

from fprect import check_all, check_pair
from fprect import reference

inst = reference.main_instance()

print("hallmark pairs (exact):")
v = check_pair(inst, "1/2", "1/2")
print(f"  interval-interval (1/2, 1/2): lhs = {v.lhs}, M = {v.m_value}, "
      f"rhs = {v.rhs}")
v = check_pair(inst, "0", "1/2")
print(f"  mixed (0, 1/2):               lhs = {v.lhs}, M = {v.m_value}, "
      f"rhs = {v.rhs}")
print(f"  rhs / M collapses to the single factor {v.rhs / v.m_value}")

report = check_all(inst)
print(f"\nall ordered pairs: {len(report.verdicts)}")
print(f"global verdict: {'PASS' if report.global_holds else 'FAIL'}")
w = report.worst_pair
print(f"tightest pair: ({w.x}, {w.y}) with margin {w.margin}")

print("\npairs collapsing to zero on the left (both points map to 0):")
shown = 0
for v in report.verdicts:
    if v.lhs == 0 and v.x < v.y and shown < 4:
        print(f"  ({v.x}, {v.y}): lhs = 0, rhs = {v.rhs}")
        shown += 1
