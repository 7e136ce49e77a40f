"""Walkthrough: the exact bound calculators and the fibration arithmetic.

Run:  python demos/04_bounds_and_numerology.py
"""

from fractions import Fraction as F

from twistscl import (
    SurfaceSpec,
    bound_report,
    cl_upper,
    find_contradiction_n,
    growth_rate_lower,
    intersection_matrix,
    invariants_report,
    scl_from_counts,
)

print("=" * 70)
print("Bound table for twists on closed surfaces")
print("=" * 70)
print(f"  {'genus':>5}  {'curve':<16} {'element':<8} {'lower':>8} {'upper':>6} {'power cap':>9}")
for g in range(2, 9):
    r = bound_report(SurfaceSpec(g))
    print(f"  {g:>5}  {'nonseparating':<16} {r.element:<8} {str(r.lower):>8} "
          f"{str(r.upper):>6} {r.commutator_power_threshold:>9}")
for g in (2, 3, 4):
    r = bound_report(SurfaceSpec(g, curve="separating", side_genus=1))
    print(f"  {g:>5}  {'separating':<16} {r.element:<8} {str(r.lower):>8} "
          f"{str(r.upper):>6} {r.commutator_power_threshold:>9}")

print()
print("Punctured/bounded surfaces get a positivity statement, never a fake number:")
r = bound_report(SurfaceSpec(1, boundary=1))
print(f"  genus 1 with one boundary: element {r.element}, positive={r.positive}, "
      f"numeric bounds: {r.lower}, {r.upper}")

print()
print("=" * 70)
print("Stabilized counts from certificate sizes")
print("=" * 70)
counts = [(10 * k, cl_upper(2, k)) for k in range(1, 51)]
est = scl_from_counts(counts)
print(f"  counts c(10k) = cl_upper(2, k) for k <= 50")
print(f"  estimate min c/n = {est.estimate}  (about {float(est.estimate):.5f})")
print(f"  subadditive: {est.subadditive}")
print(f"  10 * estimate = {10 * est.estimate} compared with the proved 3/2")

print()
print("Growth-rate lower bounds (word metric):")
for k_gen, spec, label in [
    (1, SurfaceSpec(2), "closed genus 2, k=1"),
    (5, SurfaceSpec(3), "closed genus 3, k=5"),
    (1, SurfaceSpec(0, boundary=2), "genus 0 with two boundary curves, k=1"),
]:
    print(f"  {label:<40} {growth_rate_lower(k_gen, spec)}")

print()
print("=" * 70)
print("Fibration arithmetic: the invariant ledger and the contradiction")
print("=" * 70)
inv = invariants_report(2, F(1, 10), 10)
print(f"  (g, r, n) = (2, 1/10, 10):")
for name in ("rn", "chi", "b1_upper", "b2minus_lower", "b2plus_upper",
             "sigma_upper", "c1sq_upper", "c1sq_li_lower", "contradiction_value"):
    print(f"    {name:>20} = {getattr(inv, name)}")
print(f"    {'premise':>20} = {inv.premise}")

print()
for g, r in [(3, F(1, 49)), (3, F(1, 24)), (2, F(1, 31))]:
    found = find_contradiction_n(g, r)
    if found.impossible:
        print(f"  g={g}, r={r}: no contradiction (ratio at or above the bound)")
    else:
        value = invariants_report(g, r, found.n).contradiction_value
        print(f"  g={g}, r={r}: first contradiction at n={found.n} "
              f"(value {value})")

print()
form = intersection_matrix(6)
print("Intersection form of the sphere chain (m=6):")
for row in form.matrix:
    print("   ", row)
print(f"  leading minors {form.minors} -> positive definite: {form.positive_definite}")
