"""Exact rational plane geometry: scalars, points, half-planes, convex polygons.

All arithmetic is arbitrary-precision rational via fractions.Fraction.  No
floating point is used anywhere; instances whose coordinates have huge
denominators stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DegenerateError, NotConvexError

# The canonical exact scalar of the whole package.  Fraction already keeps
# gcd(|num|, den) = 1 and den >= 1, and +,-,*,/ never round.
Rational = Fraction

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "num/den" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: RationalLike) -> str:
    """Serialize as "num/den" in base 10; integers keep the explicit "/1"."""
    q = rat(value)
    return f"{q.numerator}/{q.denominator}"


def nearest_int(value: RationalLike) -> int:
    """Nearest integer, breaking ties by rounding down: nearest(1/2) = 0."""
    return math.ceil(rat(value) - Fraction(1, 2))


def frac_part(value: RationalLike) -> Fraction:
    """Fractional part q - floor(q), always in [0, 1)."""
    q = rat(value)
    return q - math.floor(q)


@dataclass(frozen=True)
class Point:
    """A point (or vector) of the rational plane."""

    x: Fraction
    y: Fraction

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, s: RationalLike) -> "Point":
        s = rat(s)
        return Point(self.x * s, self.y * s)

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Fraction:
        return self.x * self.x + self.y * self.y

    def key(self) -> tuple:
        return (self.x, self.y)


def pt(x: RationalLike, y: RationalLike) -> Point:
    """Shorthand constructor accepting ints and "num/den" strings."""
    return Point(rat(x), rat(y))


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane c1*x + c2*y <= d with a primitive integer normal."""

    c1: int
    c2: int
    d: Fraction

    def value(self, p: Point) -> Fraction:
        return self.c1 * p.x + self.c2 * p.y

    def contains(self, p: Point) -> bool:
        return self.value(p) <= self.d


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex closed polygon, vertices counterclockwise.

    Construct through polygon_from_vertices, which canonicalizes the
    vertex list; the raw constructor performs no validation.
    """

    vertices: tuple[Point, ...]

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def polygon_from_vertices(points: Iterable) -> ConvexPolygon:
    """Canonicalize a boundary walk into a counterclockwise convex polygon.

    Accepts Points or (x, y) pairs in either orientation.  Consecutive
    duplicates and collinear intermediate vertices are removed; anything
    that is not a simple strictly convex boundary is rejected.

    Raises:
        DegenerateError: fewer than 3 distinct vertices remain, or the
            walk has zero area.
        NotConvexError: some triple of consecutive vertices makes a right
            turn, or the boundary winds around more than once.
    """
    verts = [p if isinstance(p, Point) else pt(p[0], p[1]) for p in points]
    if len(verts) < 3:
        raise DegenerateError("a polygon needs at least 3 vertices")

    verts = _dedupe_cyclic(verts)
    if len(verts) < 3:
        raise DegenerateError("fewer than 3 distinct vertices")
    if _signed_area2(verts) == 0:
        raise DegenerateError("zero-area vertex walk")
    if _signed_area2(verts) < 0:
        verts.reverse()
    verts = _drop_collinear(verts)

    n = len(verts)
    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        if (b - a).cross(c - b) <= 0:
            raise NotConvexError(f"right turn at vertex ({b.x}, {b.y})")
    if _full_turns(verts) != 1:
        raise NotConvexError("boundary winds around more than once")

    start = min(range(n), key=lambda i: verts[i].key())
    return ConvexPolygon(tuple(verts[start:] + verts[:start]))


def _dedupe_cyclic(verts: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in verts:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _signed_area2(verts: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    for i in range(len(verts)):
        total += verts[i].cross(verts[(i + 1) % len(verts)])
    return total


def _drop_collinear(verts: list[Point]) -> list[Point]:
    changed = True
    while changed:
        changed = False
        keep: list[Point] = []
        n = len(verts)
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            if (b - a).cross(c - b) == 0:
                changed = True
            else:
                keep.append(b)
        verts = keep
        if len(verts) < 3:
            raise DegenerateError("collinear vertices reduce the polygon below 3 vertices")
    return verts


def _angle_half(v: Point) -> int:
    # 0 for directions with angle in [0, pi), 1 for [pi, 2*pi)
    return 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1


def _angle_less(u: Point, v: Point) -> bool:
    hu, hv = _angle_half(u), _angle_half(v)
    if hu != hv:
        return hu < hv
    return u.cross(v) > 0


def _full_turns(verts: Sequence[Point]) -> int:
    n = len(verts)
    dirs = [verts[(i + 1) % n] - verts[i] for i in range(n)]
    return sum(1 for i in range(n) if not _angle_less(dirs[i], dirs[(i + 1) % n]))


def area(P: ConvexPolygon) -> Fraction:
    """Exact area by the shoelace formula."""
    return _signed_area2(P.vertices) / 2


def edges(P: ConvexPolygon) -> list[HalfPlane]:
    """One outward closed half-plane per edge; their intersection equals P."""
    out = []
    vs = P.vertices
    for i in range(len(vs)):
        u, w = vs[i], vs[(i + 1) % len(vs)]
        e = w - u
        # rotate the ccw edge direction clockwise to point outward
        nx, ny = e.y, -e.x
        scale = math.lcm(nx.denominator, ny.denominator)
        a, b = int(nx * scale), int(ny * scale)
        g = math.gcd(abs(a), abs(b))
        a //= g
        b //= g
        hp = HalfPlane(a, b, Fraction(a) * u.x + Fraction(b) * u.y)
        out.append(hp)
    return out


def contains(P: ConvexPolygon, p: Point) -> bool:
    """Closed membership test: boundary points are members."""
    return all(hp.contains(p) for hp in edges(P))


def translate(P: ConvexPolygon, t: RationalLike, v: tuple[int, int]) -> ConvexPolygon:
    """The translate t*v + P.

    Shifting every vertex by the same vector preserves orientation,
    convexity and the lexicographic starting vertex, so the result needs
    no re-canonicalization.
    """
    t = rat(t)
    dx, dy = t * v[0], t * v[1]
    return ConvexPolygon(tuple(Point(p.x + dx, p.y + dy) for p in P.vertices))


def bounding_box(P: ConvexPolygon) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(min x, max x, min y, max y) over the vertices."""
    xs = [p.x for p in P.vertices]
    ys = [p.y for p in P.vertices]
    return min(xs), max(xs), min(ys), max(ys)


def convex_hull(points: Iterable) -> list[Point]:
    """Strict convex hull (no collinear boundary points), counterclockwise.

    Andrew's monotone chain over exact rationals.  Returns fewer than 3
    points when the input is degenerate.
    """
    pts = [p if isinstance(p, Point) else pt(p[0], p[1]) for p in points]
    uniq = sorted({p.key() for p in pts})
    pts = [Point(x, y) for x, y in uniq]
    if len(pts) < 3:
        return pts

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and (out[-1] - out[-2]).cross(p - out[-1]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def polygon_to_json_dict(P: ConvexPolygon) -> dict:
    return {"vertices": [[rat_str(p.x), rat_str(p.y)] for p in P.vertices]}


def polygon_from_json_dict(obj: dict) -> ConvexPolygon:
    return polygon_from_vertices([(v[0], v[1]) for v in obj["vertices"]])
