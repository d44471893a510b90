#!/usr/bin/env python3
"""The function catalogs and their sampled axioms.

Sixteen two-argument combinators F(s, t) are bundled; each must stay below
its first argument and touch it only where s or t vanishes.  Rational
entries evaluate exactly; the transcendental ones run at 50 significant
digits (override with FPRECT_PRECISION).
"""

from fractions import Fraction as F

from fprect import (
    cclass,
    evaluate,
    linear,
    poly_spec,
    rational_grid,
    verify_altering,
    verify_cclass,
    verify_phi_u,
)
from fprect import reference
from fprect.functions import is_exact_spec

print("sample evaluations:")
print(f"  difference at (5, 2):        {evaluate(cclass(1), F(5), F(2))}")
print(f"  scaling m=1/2 at (3, 9):     {evaluate(cclass(2, m=F(1, 2)), F(3), F(9))}")
print(f"  ratio r=1 at (1, 9):         {evaluate(cclass(16, r=1), F(1), F(9))}")
print(f"  log-form a=2 at (3, 1):      {evaluate(cclass(4, a=2), F(3), F(1))}")

print("\naxiom scan on a coarse grid (fast preview; the acceptance suite")
print("uses the full default grid):")
grid = rational_grid(F(0), F(4), F(1, 4))
for spec in reference.catalog_compliant_specs():
    report = verify_cclass(spec, grid)
    kind = "exact" if is_exact_spec(spec) else "50-digit"
    print(f"  {spec.catalog:<10} {kind:<9} "
          f"{'pass' if report.verdict else 'FAIL'}  "
          f"equality samples: {len(report.equality_samples)}")

print("\nequality loci pin down the degenerate directions:")
diff = verify_cclass(cclass(1), grid)
print(f"  difference: every equality sample has t = 0 -> "
      f"{all(t == 0 for _, t in diff.equality_samples)}")

print("\nscalar classes:")
print(f"  psi(t) = 3t/2 is an altering distance function: "
      f"{verify_altering(linear(F(3, 2))).verdict}")
print(f"  phi(t) = t^2 is a positive weight: "
      f"{verify_phi_u(poly_spec([0, 0, 1])).verdict}")
print(f"  phi(t) = 1 - t fails both axioms: "
      f"{not verify_altering(poly_spec([1, -1]), [F(0), F(1, 2), F(1)]).verdict}")
