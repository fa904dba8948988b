"""Exact rational toolkit for lattice points in translated convex polygons.

Counting (slice method plus a brute-force oracle), 2D lattice algebra
(duals, Lagrange-Gauss reduction, lattice width), exact and approximate
minimization of lattice points over translates, and generators for the
pulse-function reduction pipeline.  Everything is arbitrary-precision
rational; nothing here ever rounds.
"""

from .counting import (
    DiscrepancyReport,
    SliceProfile,
    count_bruteforce,
    count_slices,
    verify_discrepancy,
)
from .errors import PolylatError
from .lattice import (
    LatticeBasis,
    ReducedBasis,
    WidthResult,
    dual_basis,
    extend_to_unimodular,
    gauss_reduce,
    lattice_width,
    parallelepiped_diameter_sq,
    transform_polygon,
    transform_vector,
    width_along,
)
from .ratgeom import (
    ConvexPolygon,
    HalfPlane,
    Point,
    Rational,
    area,
    contains,
    convex_hull,
    edges,
    frac_part,
    nearest_int,
    polygon_from_vertices,
    pt,
    rat,
    rat_str,
    translate,
)
from .reductions import (
    APMInstance,
    PulseFunction,
    PulseQuadrilateral,
    SDAInstance,
    StackedConstruction,
    apm_eval,
    apm_solve_bruteforce,
    apm_to_polygon,
    normalize_apm,
    pulse_eval,
    pulse_quadrilateral,
    sda_solve_bruteforce,
    sda_to_apm,
    sda_to_polygon,
    verify_reduction,
)
from .transopt import (
    EventInterval,
    Mode,
    ThinSliceModel,
    TranslationResult,
    build_thin_model,
    event_intervals,
    optimize_ptas,
    optimize_sweep,
    optimize_thin,
)

__version__ = "0.1.0"
