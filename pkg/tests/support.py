"""Shared random generators and small oracles for the test suite.

Seeds come from POLYLAT_SEED so failing runs are reproducible by
exporting the same value.
"""

from __future__ import annotations

import math
import os
import random
from fractions import Fraction

from polylat import (
    ConvexPolygon,
    SDAInstance,
    convex_hull,
    edges,
    lattice_width,
    polygon_from_vertices,
    width_along,
)

BASE_SEED = int(os.environ.get("POLYLAT_SEED", "20260811"))


def rng_for(name: str) -> random.Random:
    return random.Random(f"{BASE_SEED}:{name}")


def random_fraction(rng: random.Random, lo: int, hi: int, max_den: int = 20) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_polygon(
    rng: random.Random,
    max_vertices: int = 12,
    coord: int = 50,
    max_den: int = 20,
) -> ConvexPolygon:
    """Hull of random rational points in [-coord, coord]^2."""
    while True:
        pts = [
            (random_fraction(rng, -coord, coord, max_den), random_fraction(rng, -coord, coord, max_den))
            for _ in range(rng.randint(3, max_vertices))
        ]
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return polygon_from_vertices(hull)


def random_thin_polygon(
    rng: random.Random,
    length: int = 25,
    height: int = 6,
    max_den: int = 20,
) -> ConvexPolygon:
    """Polygon inside a [0, length] x [0, height] strip with decent area."""
    while True:
        pts = [
            (random_fraction(rng, 0, length, max_den), random_fraction(rng, 0, height, max_den))
            for _ in range(rng.randint(5, 10))
        ]
        hull = convex_hull(pts)
        if len(hull) < 3:
            continue
        P = polygon_from_vertices(hull)
        from polylat import area

        if area(P) >= Fraction(length * height, 6):
            return P


def random_wide_polygon(
    rng: random.Random,
    min_width: int = 4,
    radius_lo: int = 8,
    radius_hi: int = 18,
) -> ConvexPolygon:
    """Fat polygon in general position: no edge line hits a lattice point.

    Vertices sit near a circle with jittered, well-spread angles and
    non-integer coordinates; candidates are filtered on lattice width and
    on every edge offset being non-integer.
    """
    while True:
        r = rng.randint(radius_lo, radius_hi)
        cx = random_fraction(rng, -5, 5, 7)
        cy = random_fraction(rng, -5, 5, 7)
        m = rng.randint(9, 12)
        pts = []
        for i in range(m):
            theta = 2 * math.pi * (i + 0.35 * rng.random()) / m
            den = 2 * rng.randint(2, 10)
            x = Fraction(round((r * math.cos(theta)) * den), den)
            y = Fraction(round((r * math.sin(theta)) * den), den)
            pts.append((cx + x, cy + y))
        hull = convex_hull(pts)
        if len(hull) < 3:
            continue
        P = polygon_from_vertices(hull)
        if lattice_width(P).width < min_width:
            continue
        if any(hp.d.denominator == 1 for hp in edges(P)):
            continue
        return P


def random_valid_sda(rng: random.Random, max_n: int = 2, max_q: int = 10, max_d: int = 400) -> SDAInstance:
    """Pipeline-valid instance: every derived pulse has k >= 1 and
    eps' <= d/2, so the polygon construction accepts it."""
    while True:
        n = rng.randint(1, max_n)
        q_max = rng.randint(2, max_q)
        base = rng.choice([12, 24, 36, 60, 90, 120, 180, 240, 360, 400])
        if base > max_d:
            continue
        alphas = []
        for _ in range(n):
            # alpha >= 1/(2Q) with margin keeps nearest(Q*alpha) >= 1
            num = rng.randint(max(1, base // (2 * q_max) + 1), base - 1)
            alphas.append(Fraction(num, base))
        # eps <= 1/2 - alpha/(2D) for every alpha keeps pulses narrow enough
        limit = min(Fraction(1, 2) - a / (2 * base) for a in alphas)
        eps = Fraction(rng.randint(0, int(limit * base)), base)
        try:
            inst = SDAInstance(tuple(alphas), q_max, eps)
        except Exception:
            continue
        from polylat import sda_to_apm

        try:
            apm = sda_to_apm(inst)
        except Exception:
            continue
        if all(p.k >= 1 for p in apm.pulses):
            return inst


def width_oracle(P: ConvexPolygon, box: int) -> Fraction:
    """Exhaustive minimum of width_along over nonzero vectors in a box."""
    best = None
    for p in range(-box, box + 1):
        for q in range(-box, box + 1):
            if (p, q) == (0, 0):
                continue
            w = width_along(P, (p, q))
            if best is None or w < best:
                best = w
    return best
