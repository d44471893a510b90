#!/usr/bin/env python3
"""Orbit iteration and the convergence diagnostics.

Because the bundled instance passes the pairwise check, every orbit must
reach the unique zero-weight fixed point; the augmented step sequence may
never increase along the way, and the step/skip/weight tails must vanish.
The solver records all of it in the trace.
"""

from fprect import (
    check_vanishing,
    exhaustive_solve,
    picard_iterate,
    uniqueness_scan,
    verify_decreasing,
    verify_fixed_point,
)
from fprect import reference

inst = reference.main_instance()

result = picard_iterate(inst, "1/2")
tr = result.trace
print(f"start 1/2: status = {result.status.value}, fixed point = "
      f"{result.point} after {result.iterations} steps")
print(f"{'n':>2}  {'x_n':>6}  {'step':>8}  {'skip':>6}  {'weight':>6}  {'aug':>8}")
for i, lab in enumerate(tr.orbit):
    step = str(tr.step_dist[i]) if i < len(tr.step_dist) else "-"
    skip = str(tr.skip_dist[i]) if i < len(tr.skip_dist) else "-"
    aug = str(tr.augmented[i]) if i < len(tr.augmented) else "-"
    print(f"{i:>2}  {lab:>6}  {step:>8}  {skip:>6}  {str(tr.weights[i]):>6}  {aug:>8}")

dec = verify_decreasing(tr)
van = check_vanishing(tr)
print(f"\naugmented sequence nonincreasing: {dec.ok}")
print(f"tails vanish at indices: step {van.step.index}, "
      f"skip {van.skip.index}, weights {van.weights.index}")

print(f"\nfixed-point certificate at 0: {verify_fixed_point(inst, '0').ok} "
      f"(distance and weight both exactly zero)")
print(f"brute-force fixed points: {uniqueness_scan(inst)}")

results = exhaustive_solve(inst)
assert all(r.point == "0" for r in results.values())
print(f"every one of the {len(results)} start points lands on 0; the longest "
      f"approach takes {max(r.iterations for r in results.values())} steps")
