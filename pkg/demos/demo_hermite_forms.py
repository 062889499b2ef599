"""Hermite normal forms over F_2[x]: canonical orbit representatives.

Two matrices generate the same left orbit under unimodular multiplication
exactly when their canonical forms coincide.  The witness matrix u returned
alongside the form satisfies u @ m = h with constant nonzero determinant.
"""

from orbitcount import PolyMatrix, Poly, hnf, same_orbit
from orbitcount.fields import field_of_order
from orbitcount.polymat import det_constant

F2 = field_of_order(2)


def p(*coeffs):
    return Poly(F2, coeffs)


examples = [
    ("a swap", [[p(), p(1)], [p(0, 1), p()]]),
    ("a Euclidean step", [[p(1, 1), p(1)], [p(1), p(0, 1)]]),
    ("already canonical", [[p(1), p(0, 1)], [p(), p(1, 1, 1)]]),
]

for name, rows in examples:
    m = PolyMatrix(rows)
    form = hnf(m)
    print(f"{name}:")
    print(f"  m = {m}")
    print(f"  h = {form.h}   (det degree {form.det_degree})")
    print(f"  u = {form.u}   (det(u) = {det_constant(form.u)})")
    assert form.u @ m == form.h
    print()

a = PolyMatrix([[p(1, 1), p(1)], [p(1), p(0, 1)]])
b = hnf(a).h
print("same_orbit(m, its canonical form):", same_orbit(a, b))
c = PolyMatrix([[p(1), p()], [p(), p(1, 1, 1)]])
print("same_orbit with a different diagonal:", same_orbit(a, c))
