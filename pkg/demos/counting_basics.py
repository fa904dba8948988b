"""Exact counting of lattice points in convex rational polygons.

Walks through polygon construction, exact areas, the vertical slice
counter, and the brute-force oracle it is checked against.

Run: python demos/counting_basics.py
"""

from fractions import Fraction as F

from polylat import (
    area,
    count_bruteforce,
    count_slices,
    polygon_from_vertices,
    translate,
)

print("=== polygons are exact rational objects ===")
quad = polygon_from_vertices([("7/25", 0), ("228/25", 0), ("381/50", 2), ("239/50", 2)])
print("vertices:", [(str(v.x), str(v.y)) for v in quad.vertices])
print("area:", area(quad), "(exactly 292/25, no rounding anywhere)")

print()
print("=== counting by vertical slices ===")
total, slices = count_slices(quad)
for s in slices:
    print(f"  column x={s.x1}: chord [{s.lo}, {s.hi}] holds {s.count} points")
print("slice total:", total)
print("brute-force oracle:", count_bruteforce(quad))

print()
print("=== counts respond to translation ===")
for i in range(6):
    t = F(i, 10)
    moved = translate(quad, t, (-1, 0))
    print(f"  t={t}: {count_slices(moved)[0]} points")

print()
print("=== boundary points count (closed membership) ===")
tri = polygon_from_vertices([(0, 0), (2, 0), (0, 2)])
print("triangle (0,0),(2,0),(0,2):", count_bruteforce(tri), "points (6: a boundary-heavy count)")
