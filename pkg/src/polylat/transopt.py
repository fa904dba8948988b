"""Minimizing lattice points over translates t*v + P, t in [0, 1].

Three routes:

* optimize_sweep: exact oracle.  Every lattice point of the swept region
  contributes a closed membership interval in t; the count function is
  piecewise constant with breakpoints only at interval endpoints, so
  evaluating endpoints and gap midpoints is exhaustive.
* optimize_thin: exact method for polygons that are thin along some
  primitive direction y.  After a unimodular change of coordinates the
  per-column chord endpoints are affine in t on each member of a finite
  interval partition, and the count only changes where such an endpoint
  crosses an integer.
* optimize_ptas: computes the lattice width; thin polygons are solved
  exactly, wide ones get a (1 + 1/k) certificate for the trivial
  translate.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .counting import count_slices
from .errors import ZeroDirectionError
from .lattice import IntVec, extend_to_unimodular, lattice_width, transform_polygon, transform_vector
from .ratgeom import ConvexPolygon, Point, bounding_box, edges, rat, translate

ZERO = Fraction(0)
ONE = Fraction(1)


class Mode(enum.Enum):
    EXACT_SWEEP = "EXACT_SWEEP"
    EXACT_THIN = "EXACT_THIN"
    PTAS_CERTIFICATE = "PTAS_CERTIFICATE"


@dataclass(frozen=True)
class TranslationResult:
    """Optimizer outcome.  count is the number of lattice points in
    translate(P, t_star, v); unless mode is PTAS_CERTIFICATE it is the
    global minimum over t in [0, 1]."""

    t_star: Fraction
    count: int
    mode: Mode
    ratio_bound: Fraction | None = None


@dataclass(frozen=True)
class EventInterval:
    """{t in [0,1] : z in t*v + P} = [lo, hi] for one lattice point z."""

    point: IntVec
    lo: Fraction
    hi: Fraction


def event_intervals(P: ConvexPolygon, v: IntVec) -> list[EventInterval]:
    """Membership intervals for every lattice point the sweep can cover.

    z lies in t*v + P iff c.z - t*(c.v) <= d for every edge half-plane,
    a linear condition in t; the box of P united with v + P covers all
    candidate points.
    """
    half_planes = edges(P)
    # (g, rhs) per edge: t*g >= c.z - d
    rows = [(hp.c1 * v[0] + hp.c2 * v[1], hp) for hp in half_planes]

    xmin, xmax, ymin, ymax = bounding_box(P)
    xs = (xmin, xmax, xmin + v[0], xmax + v[0])
    ys = (ymin, ymax, ymin + v[1], ymax + v[1])

    out = []
    for zx in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for zy in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            lo, hi = ZERO, ONE
            for g, hp in rows:
                excess = hp.c1 * zx + hp.c2 * zy - hp.d
                if g == 0:
                    if excess > 0:
                        lo = None
                        break
                elif g > 0:
                    t_bound = excess / g
                    if t_bound > lo:
                        lo = t_bound
                else:
                    t_bound = excess / g
                    if t_bound < hi:
                        hi = t_bound
            if lo is not None and lo <= hi:
                out.append(EventInterval((zx, zy), lo, hi))
    return out


def optimize_sweep(P: ConvexPolygon, v: IntVec) -> TranslationResult:
    """Exact global minimum over t in [0, 1] by breakpoint enumeration.

    Among minimizing candidates the smallest t is reported.
    """
    if v == (0, 0):
        raise ZeroDirectionError("translation direction must be nonzero")
    intervals = event_intervals(P, v)
    los = sorted(iv.lo for iv in intervals)
    his = sorted(iv.hi for iv in intervals)

    def count_at(t: Fraction) -> int:
        # intervals with lo <= t minus intervals with hi < t
        return bisect_right(los, t) - bisect_left(his, t)

    endpoints = sorted({ZERO, ONE, *los, *his})
    candidates = list(endpoints)
    for a, b in zip(endpoints, endpoints[1:]):
        candidates.append((a + b) / 2)
    candidates.sort()

    best_t, best_count = ZERO, count_at(ZERO)
    for t in candidates:
        c = count_at(t)
        if c < best_count:
            best_t, best_count = t, c
    return TranslationResult(best_t, best_count, Mode.EXACT_SWEEP)


@dataclass(frozen=True)
class AffineForm:
    """value(t) = const + slope * t."""

    const: Fraction
    slope: Fraction

    def __call__(self, t: Fraction) -> Fraction:
        return self.const + self.slope * t


@dataclass(frozen=True)
class ThinSliceModel:
    """Exact slice description on one interval of the t-partition.

    Valid on the open interval (t_lo, t_hi): there the leftmost integer
    column gamma = ceil(beta(t)) is constant, columns gamma..gamma+len-1
    meet the translate, and column gamma+i has chord
    [lowers[i](t), uppers[i](t)] with both endpoints affine in t.
    """

    t_lo: Fraction
    t_hi: Fraction
    gamma: int
    beta: AffineForm
    lowers: tuple[AffineForm, ...]
    uppers: tuple[AffineForm, ...]

    def count_at(self, t: Fraction) -> int:
        total = 0
        for lo, hi in zip(self.lowers, self.uppers):
            total += max(0, math.floor(hi(t)) - math.ceil(lo(t)) + 1)
        return total


def build_thin_model(P: ConvexPolygon, v: IntVec, y: IntVec) -> list[ThinSliceModel]:
    """Interval partition of [0, 1] with exact affine slice forms.

    Coordinates are first unimodularly transformed so that y becomes e1;
    the models describe vertical integer columns of the transformed
    translates.  Breakpoints are every t where a vertex crosses an
    integer vertical line (which covers all changes of gamma and of the
    edge a chord endpoint rides on).
    """
    if v == (0, 0):
        raise ZeroDirectionError("translation direction must be nonzero")
    U = extend_to_unimodular(y)
    P2 = transform_polygon(U, P)
    v2 = transform_vector(U, v)
    return _build_models(P2, v2)


def _build_models(P2: ConvexPolygon, v2: IntVec) -> list[ThinSliceModel]:
    half_planes = edges(P2)
    xs = [p.x for p in P2.vertices]
    beta0 = min(xs)
    w = max(xs) - beta0
    v2x = Fraction(v2[0])
    cv = {hp: hp.c1 * v2[0] + hp.c2 * v2[1] for hp in half_planes}

    events = {ZERO, ONE}
    if v2x != 0:
        for xv in set(xs):
            a, b = sorted((xv, xv + v2x))
            for m in range(math.ceil(a), math.floor(b) + 1):
                t = (m - xv) / v2x
                if ZERO < t < ONE:
                    events.add(t)
    breaks = sorted(events)

    models = []
    for ta, tb in zip(breaks, breaks[1:]):
        tmid = (ta + tb) / 2
        beta_mid = beta0 + tmid * v2x
        gamma = math.ceil(beta_mid)
        last = math.floor(beta_mid + w)
        lowers = []
        uppers = []
        for col in range(gamma, last + 1):
            xi = col - tmid * v2x
            lo_edge = None
            lo_val = None
            hi_edge = None
            hi_val = None
            for hp in half_planes:
                if hp.c2 == 0:
                    continue
                val = (hp.d - hp.c1 * xi) / hp.c2
                if hp.c2 < 0:
                    if lo_val is None or val > lo_val:
                        lo_val, lo_edge = val, hp
                else:
                    if hi_val is None or val < hi_val:
                        hi_val, hi_edge = val, hp
            lowers.append(_endpoint_form(lo_edge, cv[lo_edge], col))
            uppers.append(_endpoint_form(hi_edge, cv[hi_edge], col))
        models.append(
            ThinSliceModel(ta, tb, gamma, AffineForm(beta0, v2x), tuple(lowers), tuple(uppers))
        )
    return models


def _endpoint_form(hp, cdotv, col: int) -> AffineForm:
    # translate's edge line: c.x = d + t*(c.v); solve for y at x = col
    return AffineForm((hp.d - hp.c1 * col) / hp.c2, Fraction(cdotv, hp.c2))


def optimize_thin(P: ConvexPolygon, v: IntVec, y: IntVec) -> TranslationResult:
    """Exact minimum via the interval models; matches optimize_sweep.

    On each interval the count changes only where a chord endpoint form
    takes an integer value, so those breakpoints plus gap midpoints are
    exhaustive in the interior; interval boundaries are evaluated by a
    direct slice count of the transformed translate.
    """
    if v == (0, 0):
        raise ZeroDirectionError("translation direction must be nonzero")
    U = extend_to_unimodular(y)
    P2 = transform_polygon(U, P)
    v2 = transform_vector(U, v)
    models = _build_models(P2, v2)

    best_t: Fraction | None = None
    best_count: int | None = None

    def consider(t: Fraction, c: int) -> None:
        nonlocal best_t, best_count
        if best_count is None or c < best_count or (c == best_count and t < best_t):
            best_t, best_count = t, c

    for t in sorted({m.t_lo for m in models} | {m.t_hi for m in models}):
        consider(t, count_slices(translate(P2, t, v2))[0])

    for model in models:
        seconds: set[Fraction] = set()
        for form in (*model.lowers, *model.uppers):
            if form.slope == 0:
                continue
            a, b = sorted((form(model.t_lo), form(model.t_hi)))
            for m in range(math.ceil(a), math.floor(b) + 1):
                t = (m - form.const) / form.slope
                if model.t_lo < t < model.t_hi:
                    seconds.add(t)
        pts = [model.t_lo, *sorted(seconds), model.t_hi]
        cands = sorted(seconds)
        for a, b in zip(pts, pts[1:]):
            cands.append((a + b) / 2)
        for t in cands:
            consider(t, model.count_at(t))

    return TranslationResult(best_t, best_count, Mode.EXACT_THIN)


def optimize_ptas(P: ConvexPolygon, v: IntVec, k: int) -> TranslationResult:
    """Exact answer for thin polygons, (1 + 1/k) certificate for wide ones.

    If the lattice width is at most 4k the thin method runs along the
    width direction; otherwise every translate is within a factor
    1 + 1/k of optimal and the t = 0 translate is reported.
    """
    if k < 1:
        raise ValueError("approximation parameter k must be a positive integer")
    wr = lattice_width(P)
    if wr.width <= 4 * k:
        return optimize_thin(P, v, wr.direction)
    count0, _ = count_slices(P)
    return TranslationResult(ZERO, count0, Mode.PTAS_CERTIFICATE, ONE + Fraction(1, k))
