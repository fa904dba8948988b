"""Hardness pipeline: pulse functions, Diophantine instances, generators.

The chain goes simultaneous-Diophantine-approximation instance ->
arithmetic-progression-meeting instance (pulse functions) -> convex
polygon whose horizontal translates count lattice points as a constant
plus the pulse sum.  Brute-force solvers for both decision problems act
as cross-checking oracles, and verify_reduction replays the counting law
on a deterministic sample set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import count_slices
from .errors import (
    DegenerateProgressionError,
    InvalidAlphaError,
    NotNormalizedError,
    PulseTooWideError,
    VerificationFailedError,
)
from .ratgeom import (
    ConvexPolygon,
    Point,
    frac_part,
    nearest_int,
    polygon_from_vertices,
    polygon_to_json_dict,
    rat,
    rat_str,
    translate,
)
from .transopt import optimize_sweep

LEFTWARD = (-1, 0)


@dataclass(frozen=True)
class PulseFunction:
    """0 within distance eps of a point of {a, a+d, ..., a+k*d}, 1 elsewhere.

    The zero windows are open intervals; eps <= d/2 keeps them pairwise
    disjoint, which the constructor enforces whenever k >= 1.
    """

    a: Fraction
    k: int
    d: Fraction
    eps: Fraction

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("progression length k must be nonnegative")
        if self.d <= 0:
            raise ValueError("progression step d must be positive")
        if self.eps <= 0:
            raise ValueError("pulse width eps must be positive")
        if self.k >= 1 and self.eps > self.d / 2:
            raise PulseTooWideError(
                f"eps {self.eps} exceeds d/2 = {self.d / 2}; zero windows would overlap"
            )

    def progression(self) -> list[Fraction]:
        return [self.a + i * self.d for i in range(self.k + 1)]

    def zero_intervals(self) -> list[tuple[Fraction, Fraction]]:
        """The open intervals on which the pulse vanishes, ascending."""
        return [(y - self.eps, y + self.eps) for y in self.progression()]

    def discontinuities(self) -> list[Fraction]:
        out = []
        for lo, hi in self.zero_intervals():
            out.extend((lo, hi))
        return out


def pulse_eval(p: PulseFunction, x) -> int:
    """Exact evaluation; the zero windows are strict inequalities."""
    x = rat(x)
    i0 = math.floor((x - p.a) / p.d)
    # clamping covers k = 0 pulses, whose single window may exceed d/2
    for i in {min(max(i0, 0), p.k), min(max(i0 + 1, 0), p.k)}:
        if abs(x - (p.a + i * p.d)) < p.eps:
            return 0
    return 1


@dataclass(frozen=True)
class APMInstance:
    """A family of pulse functions; the question is a common zero."""

    pulses: tuple[PulseFunction, ...]

    def __post_init__(self):
        if not self.pulses:
            raise ValueError("instance needs at least one pulse")

    def is_normalized(self) -> bool:
        """True when every discontinuity lies strictly inside (0, 1)."""
        for p in self.pulses:
            if not (p.a - p.eps > 0 and p.a + p.k * p.d + p.eps < 1):
                return False
        return True


def apm_eval(inst: APMInstance, x) -> int:
    return sum(pulse_eval(p, x) for p in inst.pulses)


def apm_solve_bruteforce(inst: APMInstance) -> Fraction | None:
    """Exact root search by intersecting the zero-interval families.

    Returns the midpoint of the leftmost cell of the intersection, or
    None when the pulses never vanish simultaneously.
    """
    cells = inst.pulses[0].zero_intervals()
    for p in inst.pulses[1:]:
        nxt = []
        for lo1, hi1 in cells:
            for lo2, hi2 in p.zero_intervals():
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if lo < hi:
                    nxt.append((lo, hi))
        if not nxt:
            return None
        cells = nxt
    lo, hi = min(cells)
    return (lo + hi) / 2


@dataclass(frozen=True)
class SDAInstance:
    """Do some q <= Q and integers p_j give |q*alpha_j - p_j| <= eps?

    The nearest integer breaks ties by rounding down.  D is the common
    denominator of the alphas and eps, derived, never stored on disk.
    """

    alphas: tuple[Fraction, ...]
    Q: int
    eps: Fraction

    def __post_init__(self):
        if not self.alphas:
            raise ValueError("instance needs at least one alpha")
        if self.Q < 1:
            raise ValueError("Q must be a positive integer")
        if self.eps < 0:
            raise ValueError("eps must be nonnegative")
        for a in self.alphas:
            if not (0 < a < 1):
                raise InvalidAlphaError(f"alpha {a} outside (0, 1)")

    @property
    def D(self) -> int:
        d = self.eps.denominator
        for a in self.alphas:
            d = math.lcm(d, a.denominator)
        return d


def sda_solve_bruteforce(inst: SDAInstance) -> int | None:
    """Linear scan q = 1..Q with exact nearest-integer comparison."""
    for q in range(1, inst.Q + 1):
        if all(abs(q * a - nearest_int(q * a)) <= inst.eps for a in inst.alphas):
            return q
    return None


def sda_to_apm(inst: SDAInstance) -> APMInstance:
    """Pulse encoding of a Diophantine instance (unnormalized).

    Pulse j (j >= 1) vanishes iff |x - i/alpha_j| < eps/alpha_j + 1/(2D)
    for some i in {0, ..., nearest(Q*alpha_j)}; the extra 1/(2D) absorbs
    the strictness of pulse windows, which the common denominator D makes
    harmless.  Pulse 0 pins x near an integer in {1, ..., Q}.  Raises
    PulseTooWide when a window family would overlap (eps too close to
    1/2), in which case the encoding does not apply.
    """
    D = inst.D
    half_grid = Fraction(1, 2 * D)
    pulses = [PulseFunction(a=Fraction(1), k=inst.Q - 1, d=Fraction(1), eps=half_grid)]
    for alpha in inst.alphas:
        pulses.append(
            PulseFunction(
                a=Fraction(0),
                k=nearest_int(inst.Q * alpha),
                d=1 / alpha,
                eps=inst.eps / alpha + half_grid,
            )
        )
    return APMInstance(tuple(pulses))


@dataclass(frozen=True)
class AffineMap:
    """x -> (x + shift) / scale, with scale > 0; invertible for pull-back."""

    shift: Fraction
    scale: Fraction

    def apply(self, x) -> Fraction:
        return (rat(x) + self.shift) / self.scale

    def invert(self, y) -> Fraction:
        return rat(y) * self.scale - self.shift


def normalize_apm(inst: APMInstance) -> tuple[APMInstance, AffineMap]:
    """One global affine map placing every discontinuity strictly in (0, 1).

    Roots correspond under the map, which is returned so witnesses can be
    pulled back to the original axis.
    """
    lo = min(p.a - p.eps for p in inst.pulses)
    hi = max(p.a + p.k * p.d + p.eps for p in inst.pulses)
    margin = 1 + max(p.eps for p in inst.pulses)
    shift = margin - lo
    scale = (hi - lo) + 2 * margin
    mapped = APMInstance(
        tuple(
            PulseFunction(
                a=(p.a + shift) / scale,
                k=p.k,
                d=p.d / scale,
                eps=p.eps / scale,
            )
            for p in inst.pulses
        )
    )
    return mapped, AffineMap(shift, scale)


@dataclass(frozen=True)
class PulseQuadrilateral:
    """A trapezoid whose leftward translates count points as M + pulse.

    Corner rows y1 (bottom) and y2 = y1 + k (top) carry the corners
    (l1, y1), (r1, y1), (l2, y2), (r2, y2).  Row i spans [alpha_i, beta_i]
    with fractional parts a + i*d + eps and a + i*d - eps, so as the
    trapezoid slides left one unit, each row loses and regains one point
    exactly on the zero window of its progression point.
    """

    pulse: PulseFunction
    l1: Fraction
    r1: Fraction
    l2: Fraction
    r2: Fraction
    y1: int
    y2: int
    row_counts: tuple[int, ...]
    m_const: int

    def row_chord(self, i: int) -> tuple[Fraction, Fraction]:
        """Chord [alpha_i, beta_i] of row y1 + i, for 0 <= i <= k."""
        k = self.pulse.k
        lo = self.l1 + Fraction(i, k) * (self.l2 - self.l1)
        hi = self.r1 + Fraction(i, k) * (self.r2 - self.r1)
        return lo, hi

    def polygon(self) -> ConvexPolygon:
        return polygon_from_vertices(
            [
                Point(self.l1, Fraction(self.y1)),
                Point(self.r1, Fraction(self.y1)),
                Point(self.r2, Fraction(self.y2)),
                Point(self.l2, Fraction(self.y2)),
            ]
        )


def pulse_quadrilateral(
    pulse: PulseFunction,
    y1: int,
    floor_l1: int,
    floor_l2: int,
    floor_r1: int,
    floor_r2: int,
) -> PulseQuadrilateral:
    """Build the trapezoid for a pulse from chosen corner integer parts.

    The fractional parts are dictated by the pulse; the caller picks the
    integer parts, subject to divisibility by k on each side and l < r on
    both corner rows.  All of the pulse's discontinuities must lie
    strictly inside (0, 1).
    """
    if pulse.k < 1:
        raise DegenerateProgressionError(
            "a single-point progression spans no rows; the trapezoid would be flat"
        )
    if not (pulse.a - pulse.eps > 0 and pulse.a + pulse.k * pulse.d + pulse.eps < 1):
        raise NotNormalizedError("pulse discontinuities must lie strictly in (0, 1)")
    if (floor_l2 - floor_l1) % pulse.k != 0 or (floor_r2 - floor_r1) % pulse.k != 0:
        raise ValueError("corner integer parts must differ by multiples of k on each side")

    span = pulse.k * pulse.d
    l1 = floor_l1 + pulse.a + pulse.eps
    l2 = floor_l2 + pulse.a + span + pulse.eps
    r1 = floor_r1 + pulse.a - pulse.eps
    r2 = floor_r2 + pulse.a + span - pulse.eps
    if not (l1 < r1 and l2 < r2):
        raise ValueError("corner rows must satisfy l < r")

    row_counts = []
    for i in range(pulse.k + 1):
        lo = l1 + Fraction(i, pulse.k) * (l2 - l1)
        hi = r1 + Fraction(i, pulse.k) * (r2 - r1)
        m_i = math.floor(hi) - math.ceil(lo)
        if m_i < 0:
            raise ValueError("row too narrow; corner integer parts leave no room")
        row_counts.append(m_i)
    # at a zero window exactly one of the k+1 rows drops its point, so
    # the constant in count = M + pulse is sum(M_i) + k
    m_const = sum(row_counts) + pulse.k
    return PulseQuadrilateral(
        pulse=pulse,
        l1=l1,
        r1=r1,
        l2=l2,
        r2=r2,
        y1=y1,
        y2=y1 + pulse.k,
        row_counts=tuple(row_counts),
        m_const=m_const,
    )


@dataclass(frozen=True)
class StackedConstruction:
    """The assembled polygon, its per-pulse trapezoids, and the offset M."""

    polygon: ConvexPolygon
    quads: tuple[PulseQuadrilateral, ...]
    m_total: int


def apm_to_polygon(inst: APMInstance) -> StackedConstruction:
    """Stack one trapezoid per pulse into a convex 2n+2-gon.

    Left corner integer parts follow the recurrences
    floor(l2_j) = floor(l1_j) + 3j*k_j and
    floor(l1_{j+1}) = floor(l2_j) + 3j + 2, anchored at floor(l1_1) = 0;
    the right side descends by 3j*k_j across a trapezoid and by 3j + 1
    between trapezoids, and is then shifted right by one common integer
    so every row satisfies l < r.  The spacing makes left slopes
    1/(3j + d_j) strictly decreasing and right slopes -1/(3j - d_j) of
    strictly decreasing magnitude, and it keeps adjacent edge-line
    intersections strictly between neighboring trapezoids: with
    normalized pulses (a - eps > 0, a + k*d + eps < 1, hence d < 1) the
    between-trapezoid gaps need slope_increment - gap >= 1 on the side
    where corners sit at fractional part a + eps, and gap - slope stays
    positive; on the right side, whose corners sit at a - eps, the sharp
    requirements are slope_increment - gap >= 2 and gap - slope >= 1,
    which 3j + 1 meets and the left's 3j + 2 does not.  Each integer row
    of the polygon then coincides with a row of exactly one trapezoid.
    """
    if not inst.is_normalized():
        raise NotNormalizedError("every pulse discontinuity must lie strictly in (0, 1)")
    for p in inst.pulses:
        if p.k < 1:
            raise DegenerateProgressionError(
                "single-point progressions cannot be stacked; filter them out upstream"
            )

    plan = []
    fl1, fr1 = 0, 0
    y1 = 0
    for idx, p in enumerate(inst.pulses):
        j = idx + 1
        fl2 = fl1 + 3 * j * p.k
        fr2 = fr1 - 3 * j * p.k
        plan.append((p, y1, fl1, fl2, fr1, fr2))
        y1 = y1 + p.k + 1
        fl1 = fl2 + 3 * j + 2
        fr1 = fr2 - (3 * j + 1)

    max_left = max(
        max(fl1_ + p.a + p.eps, fl2_ + p.a + p.k * p.d + p.eps)
        for p, _, fl1_, fl2_, _, _ in plan
    )
    min_right = min(
        min(fr1_ + p.a - p.eps, fr2_ + p.a + p.k * p.d - p.eps)
        for p, _, _, _, fr1_, fr2_ in plan
    )
    shift = math.floor(max_left - min_right) + 2

    quads = tuple(
        pulse_quadrilateral(p, y1_, fl1_, fl2_, fr1_ + shift, fr2_ + shift)
        for p, y1_, fl1_, fl2_, fr1_, fr2_ in plan
    )
    return StackedConstruction(
        polygon=_assemble_polygon(quads),
        quads=quads,
        m_total=sum(q.m_const for q in quads),
    )


def _assemble_polygon(quads: tuple[PulseQuadrilateral, ...]) -> ConvexPolygon:
    first, last = quads[0], quads[-1]
    verts = [
        Point(first.l1, Fraction(first.y1)),
        Point(first.r1, Fraction(first.y1)),
    ]
    for qa, qb in zip(quads, quads[1:]):
        verts.append(
            _between_quads(
                qa,
                qb,
                _line_intersection(
                    Point(qa.r1, Fraction(qa.y1)),
                    Point(qa.r2, Fraction(qa.y2)),
                    Point(qb.r1, Fraction(qb.y1)),
                    Point(qb.r2, Fraction(qb.y2)),
                ),
            )
        )
    verts.append(Point(last.r2, Fraction(last.y2)))
    verts.append(Point(last.l2, Fraction(last.y2)))
    for qb, qa in zip(reversed(quads[1:]), reversed(quads[:-1])):
        verts.append(
            _between_quads(
                qa,
                qb,
                _line_intersection(
                    Point(qb.l1, Fraction(qb.y1)),
                    Point(qb.l2, Fraction(qb.y2)),
                    Point(qa.l1, Fraction(qa.y1)),
                    Point(qa.l2, Fraction(qa.y2)),
                ),
            )
        )
    return polygon_from_vertices(verts)


def _between_quads(qa: PulseQuadrilateral, qb: PulseQuadrilateral, p: Point) -> Point:
    # the edge-line crossing must fall strictly between the trapezoids,
    # otherwise some integer row of the polygon would not match its quad
    if not (qa.y2 < p.y < qb.y1):
        raise ValueError(
            f"edge lines cross at ordinate {p.y}, not strictly between rows {qa.y2} and {qb.y1}"
        )
    return p


def _line_intersection(a1: Point, a2: Point, b1: Point, b2: Point) -> Point:
    da, db = a2 - a1, b2 - b1
    denom = da.cross(db)
    if denom == 0:
        raise ValueError("parallel edge lines cannot intersect")
    s = (b1 - a1).cross(db) / denom
    return a1 + da.scale(s)


@dataclass(frozen=True)
class ReductionReport:
    """Successful verification outcome."""

    samples_checked: int
    m_total: int
    min_count: int
    apm_root: Fraction | None


def verify_reduction(
    sc: StackedConstruction, inst: APMInstance, samples: int = 200
) -> ReductionReport:
    """Replay count(translate(P, t, (-1,0))) = M + pulse_sum(frac(t)).

    The sample set is deterministic: every pulse discontinuity, each
    probed a quarter grid step to either side (the grid being 1 over the
    lcm of discontinuity denominators), plus an even grid over [0, 1].
    Afterwards the sweep minimum is checked against the brute-force root
    search.  Raises VerificationFailed at the first offending t.
    """
    discs = sorted({d for p in inst.pulses for d in p.discontinuities()})
    grid = 1
    for d in discs:
        grid = math.lcm(grid, d.denominator)
    delta = Fraction(1, 4 * grid)

    ts = {Fraction(0), Fraction(1)}
    for d in discs:
        ts.update((d - delta, d, d + delta))
    for i in range(samples + 1):
        ts.add(Fraction(i, samples))

    for t in sorted(ts):
        got, _ = count_slices(translate(sc.polygon, t, LEFTWARD))
        want = sc.m_total + apm_eval(inst, frac_part(t))
        if got != want:
            raise VerificationFailedError(
                f"count mismatch at t = {t}: got {got}, expected {want}", t=t
            )

    sweep = optimize_sweep(sc.polygon, LEFTWARD)
    root = apm_solve_bruteforce(inst)
    if root is not None and sweep.count != sc.m_total:
        raise VerificationFailedError(
            f"pulses share a zero at {root} but sweep minimum is {sweep.count}, not {sc.m_total}",
            t=sweep.t_star,
        )
    if root is None and sweep.count <= sc.m_total:
        raise VerificationFailedError(
            f"no common zero exists but sweep minimum {sweep.count} <= {sc.m_total}",
            t=sweep.t_star,
        )
    return ReductionReport(
        samples_checked=len(ts),
        m_total=sc.m_total,
        min_count=sweep.count,
        apm_root=root,
    )


def sda_to_polygon(inst: SDAInstance) -> tuple[StackedConstruction, int]:
    """Full pipeline; the polygon's sweep minimum is at most M iff the
    Diophantine instance has a witness."""
    apm = sda_to_apm(inst)
    normalized, _ = normalize_apm(apm)
    sc = apm_to_polygon(normalized)
    return sc, sc.m_total


def pulse_to_json_dict(p: PulseFunction) -> dict:
    return {"a": rat_str(p.a), "k": p.k, "d": rat_str(p.d), "eps": rat_str(p.eps)}


def apm_to_json_dict(inst: APMInstance) -> dict:
    return {"pulses": [pulse_to_json_dict(p) for p in inst.pulses]}


def apm_from_json_dict(obj: dict) -> APMInstance:
    return APMInstance(
        tuple(
            PulseFunction(a=rat(p["a"]), k=int(p["k"]), d=rat(p["d"]), eps=rat(p["eps"]))
            for p in obj["pulses"]
        )
    )


def sda_to_json_dict(inst: SDAInstance) -> dict:
    return {"alphas": [rat_str(a) for a in inst.alphas], "Q": inst.Q, "eps": rat_str(inst.eps)}


def sda_from_json_dict(obj: dict) -> SDAInstance:
    return SDAInstance(
        alphas=tuple(rat(a) for a in obj["alphas"]),
        Q=int(obj["Q"]),
        eps=rat(obj["eps"]),
    )


def construction_to_json_dict(sc: StackedConstruction) -> dict:
    return {
        "polygon": polygon_to_json_dict(sc.polygon),
        "quads": [
            {
                "pulse": pulse_to_json_dict(q.pulse),
                "l1": rat_str(q.l1),
                "r1": rat_str(q.r1),
                "l2": rat_str(q.l2),
                "r2": rat_str(q.r2),
                "y1": q.y1,
                "y2": q.y2,
                "row_counts": list(q.row_counts),
                "M": q.m_const,
            }
            for q in sc.quads
        ],
        "M": sc.m_total,
    }
