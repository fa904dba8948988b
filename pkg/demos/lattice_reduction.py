"""2D lattice algebra: duals, Lagrange-Gauss reduction, lattice width.

Run: python demos/lattice_reduction.py
"""

from fractions import Fraction as F

from polylat import (
    dual_basis,
    extend_to_unimodular,
    gauss_reduce,
    lattice_width,
    parallelepiped_diameter_sq,
    polygon_from_vertices,
    pt,
    width_along,
)
from polylat.lattice import LatticeBasis

print("=== dual bases ===")
B = LatticeBasis(pt(1, 0), pt(1, 2))
D = dual_basis(B)
print("basis:     ", (B.b1.x, B.b1.y), (B.b2.x, B.b2.y))
print("dual:      ", (D.b1.x, D.b1.y), (D.b2.x, D.b2.y))
print("dual(dual):", dual_basis(D) == B)

print()
print("=== Lagrange-Gauss reduction ===")
skew = LatticeBasis(pt(31, 59), pt(41, 78))
R = gauss_reduce(skew)
print("input:  ", (skew.b1.x, skew.b1.y), (skew.b2.x, skew.b2.y))
print("reduced:", (R.b1.x, R.b1.y), (R.b2.x, R.b2.y), "mu =", R.mu)
print("|b1|^2 <= |b2|^2:", R.b1.norm_sq() <= R.b2.norm_sq())

d2 = parallelepiped_diameter_sq(R)
print("fundamental parallelepiped diameter^2:", d2)
print("d^2 * |b1|^2 =", d2 * R.b1.norm_sq(), "<= 144/25 =", F(144, 25))

print()
print("=== lattice width ===")
strip = polygon_from_vertices([(0, 0), (30, 1), (30, 4), (0, 3)])
wr = lattice_width(strip)
print("strip polygon width:", wr.width, "along", wr.direction)
print("compare width along (1,0):", width_along(strip, (1, 0)))

print()
print("=== sending a direction to the first axis ===")
U = extend_to_unimodular((3, 5))
print("unimodular matrix with first row (3,5):", U)
print("determinant:", U[0][0] * U[1][1] - U[0][1] * U[1][0])
