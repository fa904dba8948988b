"""2D lattice algebra: bases, duals, Lagrange-Gauss reduction, lattice width.

The lattice for width computations is fixed to Z^2; callers working over a
general lattice pre-transform their coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrimitiveError, SingularBasisError, ZeroVectorError
from .ratgeom import ConvexPolygon, Point, area, bounding_box, polygon_from_vertices, rat_str

IntVec = tuple[int, int]
IntMat = tuple[IntVec, IntVec]


@dataclass(frozen=True)
class LatticeBasis:
    """A basis (b1, b2) of a full-rank planar lattice."""

    b1: Point
    b2: Point

    def det(self) -> Fraction:
        return self.b1.cross(self.b2)


@dataclass(frozen=True)
class ReducedBasis:
    """Lagrange-Gauss reduced basis with its Gram-Schmidt data.

    Invariants: |b1| <= |b2|, b2 = b2star + mu*b1 with b2star orthogonal
    to b1 and |mu| <= 1/2, and b1 is a shortest nonzero lattice vector.
    """

    b1: Point
    b2: Point
    mu: Fraction
    b2star: Point

    def as_basis(self) -> LatticeBasis:
        return LatticeBasis(self.b1, self.b2)


@dataclass(frozen=True)
class WidthResult:
    width: Fraction
    direction: IntVec


def dual_basis(B: LatticeBasis) -> LatticeBasis:
    """Basis of the dual lattice (inverse transpose); dual of dual is B."""
    d = B.det()
    if d == 0:
        raise SingularBasisError("basis vectors are linearly dependent")
    return LatticeBasis(
        Point(B.b2.y / d, -B.b2.x / d),
        Point(-B.b1.y / d, B.b1.x / d),
    )


def gauss_reduce(B: LatticeBasis) -> ReducedBasis:
    """Classical Lagrange-Gauss reduction: swap and subtract until stable.

    The change of basis is unimodular, so the lattice is preserved.  Sign
    convention: mu = +1/2 is preferred over -1/2 (flip b2 on that tie).
    """
    if B.det() == 0:
        raise SingularBasisError("basis vectors are linearly dependent")
    b1, b2 = B.b1, B.b2
    if b1.norm_sq() > b2.norm_sq():
        b1, b2 = b2, b1
    while True:
        m = _round_nearest(b1.dot(b2) / b1.norm_sq())
        b2 = b2 - b1.scale(m)
        if b2.norm_sq() < b1.norm_sq():
            b1, b2 = b2, b1
        else:
            break
    mu = b1.dot(b2) / b1.norm_sq()
    if mu == Fraction(-1, 2):
        b2 = -b2
        mu = -mu
    return ReducedBasis(b1, b2, mu, b2 - b1.scale(mu))


def _round_nearest(q: Fraction) -> int:
    # any nearest integer works for the reduction; ties go down
    return math.ceil(q - Fraction(1, 2))


def parallelepiped_diameter_sq(R: ReducedBasis) -> Fraction:
    """Exact squared diameter of {x : 0 <= b1.x < 1, 0 <= b2.x < 1}.

    R is read as a (reduced) basis of the dual lattice; the region is a
    fundamental parallelepiped of the primal lattice.  The diameter of
    the closure is realized among its four vertices.
    """
    d = R.b1.cross(R.b2)
    if d == 0:
        raise SingularBasisError("basis vectors are linearly dependent")
    # vertices solve b1.x in {0,1}, b2.x in {0,1}
    u = Point(R.b2.y / d, -R.b2.x / d)
    w = Point(-R.b1.y / d, R.b1.x / d)
    zero = Point(Fraction(0), Fraction(0))
    verts = [zero, u, w, u + w]
    return max((p - q).norm_sq() for i, p in enumerate(verts) for q in verts[i + 1 :])


def width_along(P: ConvexPolygon, y: IntVec) -> Fraction:
    """max y.x - min y.x over P, exact."""
    if y == (0, 0):
        raise ZeroVectorError("width direction must be nonzero")
    vals = [y[0] * p.x + y[1] * p.y for p in P.vertices]
    return max(vals) - min(vals)


def _width_key(y: IntVec) -> tuple:
    p, q = y
    return (abs(p), abs(q), p, q)


def lattice_width(P: ConvexPolygon) -> WidthResult:
    """Global minimum of width_along over primitive y in Z^2 \\ {0}.

    Search certificate: any convex body satisfies
    (minimal Euclidean width) >= area / (dx + dy), so a direction y with
    ||y||_inf > w * (dx + dy) / area has width strictly above w.  The
    search therefore walks sup-norm rings, shrinking the radius bound as
    better widths are found, which never excludes a minimizer or a
    tie-break candidate.  Directions come in +-y pairs of equal width, so
    only the sign-canonical representative (q > 0, or q = 0 and p > 0) is
    considered; ties break on the lexicographically smallest
    (|p|, |q|, p, q).
    """
    a = area(P)
    xmin, xmax, ymin, ymax = bounding_box(P)
    spread = (xmax - xmin) + (ymax - ymin)

    best_w: Fraction | None = None
    best_dir: IntVec | None = None
    r = 1
    while True:
        for y in _ring(r):
            if y[1] < 0 or (y[1] == 0 and y[0] < 0):
                continue
            if math.gcd(abs(y[0]), abs(y[1])) != 1:
                continue
            w = width_along(P, y)
            if best_w is None or w < best_w or (w == best_w and _width_key(y) < _width_key(best_dir)):
                best_w, best_dir = w, y
        bound = math.ceil(best_w * spread / a)
        if r >= bound:
            break
        r += 1
    return WidthResult(best_w, best_dir)


def _ring(r: int):
    """All integer vectors with sup norm exactly r."""
    for p in range(-r, r + 1):
        yield (p, r)
        yield (p, -r)
    for q in range(-r + 1, r):
        yield (r, q)
        yield (-r, q)


def extend_to_unimodular(y: IntVec) -> IntMat:
    """A determinant-one integer matrix whose first row is the primitive y.

    The second row (s, t) comes from the extended Euclidean identity
    y1*t - y2*s = 1.  The transformed polygon U*P has the same width
    along e1 as P has along y, and U maps Z^2 bijectively onto itself.
    """
    y1, y2 = y
    g, x, w = _egcd(y1, y2)
    if g != 1:
        raise NotPrimitiveError(f"{y} is not primitive (gcd {g})")
    # y1*x + y2*w = 1, so rows (y1, y2), (-w, x) have determinant 1
    return ((y1, y2), (-w, x))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0 for (a, b) != 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def transform_point(U: IntMat, p: Point) -> Point:
    return Point(U[0][0] * p.x + U[0][1] * p.y, U[1][0] * p.x + U[1][1] * p.y)


def transform_vector(U: IntMat, v: IntVec) -> IntVec:
    return (U[0][0] * v[0] + U[0][1] * v[1], U[1][0] * v[0] + U[1][1] * v[1])


def transform_polygon(U: IntMat, P: ConvexPolygon) -> ConvexPolygon:
    """Apply an integer linear map with |det| = 1 to every vertex."""
    det = U[0][0] * U[1][1] - U[0][1] * U[1][0]
    if det == 0:
        raise SingularBasisError("transform matrix is singular")
    return polygon_from_vertices([transform_point(U, p) for p in P.vertices])


def basis_to_json_dict(B: LatticeBasis) -> dict:
    return {
        "b1": [rat_str(B.b1.x), rat_str(B.b1.y)],
        "b2": [rat_str(B.b2.x), rat_str(B.b2.y)],
    }


def basis_from_json_dict(obj: dict) -> LatticeBasis:
    from .ratgeom import pt

    return LatticeBasis(pt(*obj["b1"]), pt(*obj["b2"]))
