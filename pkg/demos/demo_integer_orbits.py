"""2x2 integer matrices with fixed determinant: classes and densities.

For determinant 4 there are exactly seven left classes under determinant-one
integer transformations (one per pair (a, d) with a*d = 4 and shift b < d)
but only two classes under two-sided unimodular equivalence, diag(1, 4) and
diag(2, 2).  Counting matrices in growing norm balls shows the two-sided
classes approach a 1:6 population ratio, and the det-1 surface grows like
6 T^2.
"""

from orbitcount.integer_orbits import (
    count_det_norm,
    drs_constant,
    hnf_classes_for_det,
    orbit_ratio_experiment,
    snf_int,
)

reps = hnf_classes_for_det(4)
print(f"left classes for det 4: {len(reps)}")
for r in reps:
    print(f"  {r}  ->  Smith form {snf_int(r)}")
print(f"two-sided classes: {len({snf_int(r) for r in reps})}\n")

T = 120
report = orbit_ratio_experiment(4, T, ladder=(T // 4, T // 2, T))
print(f"norm-ball census of the det-4 surface (ratio target 1/6 = {1/6:.4f}):")
for L in report.ladder:
    counts = report.class_counts[L]
    small = counts[((2, 0), (0, 2))]
    big = counts[((1, 0), (0, 4))]
    print(f"  T = {L:4d}: diag(2,2) class {small:7d}, diag(1,4) class {big:7d},"
          f" ratio {small / big:.4f}")

print()
for T in (40, 80, 160):
    n = count_det_norm(1, T)
    print(f"N(T={T}, det=1) = {n:7d},  N/T^2 = {n / T**2:.4f}")
print(f"predicted constant: {drs_constant(2, 1):.4f}")
