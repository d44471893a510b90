#!/usr/bin/env python3
"""Special-case presets and the alternative M-variants.

Each preset fixes (psi, F, M-variant) so a familiar special-case
inequality becomes literally the general condition: the half-sum bound is the scaling
combinator over the (0,1,1) convex average, the third-sum bound the same
over (1,1,1), and so on.  The metric-space variant (s = 1) swaps in the
four-term maximum and the psi(m) - control(l) right side.
"""

import random
from fractions import Fraction as F

from fprect import (
    ContractionInstance,
    SpaceProfile,
    cclass,
    check_all,
    check_pair,
    metric_halfsum,
    compute_l_twoterm,
    compute_m_fourterm,
    constant_map,
    explicit_map,
    generate_random_space,
    identity,
    linear,
    m_convex,
    make_preset,
    poly_spec,
)

space = generate_random_space(5, 40)
rng = random.Random(40)
labels = space.labels()
self_map = explicit_map({lab: rng.choice(labels) for lab in labels})
weight = linear(F(1, 8))

print("half-sum bound == scaling over the pair average (exact margins):")
alpha_inst = make_preset("alpha_sum", alpha=F(1, 4)).build(
    space=space, self_map=self_map, weight_phi=weight, s=F(2))
manual = ContractionInstance(
    space=space, self_map=self_map, psi=identity(), weight_phi=weight,
    control_phi=identity(), F=cclass(2, m=F(1, 2)), s=F(2),
    variant=m_convex(0, 1, 1))
a = [v.margin for v in check_all(alpha_inst).verdicts]
b = [v.margin for v in check_all(manual).verdicts]
print(f"  margins identical across {len(a)} ordered pairs: {a == b}")

print("\ndifference preset against the general checker:")
diff_inst = make_preset("difference").build(
    space=space, self_map=self_map, weight_phi=weight,
    control_phi=linear(F(1, 16)), s=F(2))
print(f"  global verdict: {check_all(diff_inst).global_holds} "
      f"(random maps rarely contract, and that is the point of a checker)")

print("\nconstant maps contract trivially (zero left side everywhere):")
const_inst = make_preset("k_max", k=F(1, 2)).build(
    space=space, self_map=constant_map(labels[0]), weight_phi=poly_spec([0]),
    s=F(2))
print(f"  global verdict: {check_all(const_inst).global_holds}")

print("\nmetric-space variant (s = 1) with the four-term maximum:")
metric = generate_random_space(4, 41, SpaceProfile.METRIC)
mlabels = metric.labels()
metric_inst = ContractionInstance(
    space=metric, self_map=constant_map(mlabels[0]), psi=identity(),
    weight_phi=linear(F(1, 4)), control_phi=linear(F(1, 16)), F=cclass(1),
    s=F(1), variant=metric_halfsum())
x, y = mlabels[1], mlabels[2]
print(f"  pair ({x}, {y}): m = {compute_m_fourterm(metric_inst, x, y)}, "
      f"l = {compute_l_twoterm(metric_inst, x, y)}")
v = check_pair(metric_inst, x, y)
print(f"  right side psi(m) - control(l) = {v.rhs}, holds: {v.holds}")
