"""Real cubics by paper folding, and the singular cubic the folds sweep.

The package follows one construction end to end: a single crease that
carries a marked point onto one reference line and a second marked
point onto another solves a general real cubic; the images of the
second point sweep a cubic curve with exactly one singular point, whose
shape (isolated point, cusp, or node) is read off a single discriminant
and double-checked geometrically at every step.
"""

from .curve import (
    BelochParams,
    OrbitPoint,
    SegmentRelation,
    ShapeClass,
    classify,
    f_eval,
    fold_line_for,
    gradient,
    hessian_at_singular,
    orbit,
    segment_relation,
    singular_scan,
    special_parameters,
    vanishes_at_a,
)
from .errors import BelochError, OracleDisagreement
from .fold import CubicEq, FoldSolution, fold_line, root_from_fold, solve_by_folding
from .general import (
    GeneralCubic,
    Normalization,
    OriginReport,
    cissoid,
    classify_origin,
    corrected_criterion,
    hessian_origin,
    normalize,
    ophiuride,
    paper_criterion,
)
from .geom import Circle, Line, Point, Segment
from .parabola import FgCount, FgIntersections, fg_intersection_count, tangent_at
from .polyroots import Poly, count_distinct_real_roots, real_roots
from .render import PlotScene, Viewport, build_scene, export_orbit_csv, render_svg
from .surface import (
    CriticalKind,
    CriticalPoint,
    StructureReport,
    critical_points,
    newton_census,
    structure_verdict,
)
from .winding import (
    ClosedLoop,
    WindingResult,
    axis_ray_crossings,
    build_loop,
    loop_from_points,
    loop_range,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "BelochError",
    "BelochParams",
    "Circle",
    "ClosedLoop",
    "CriticalKind",
    "CriticalPoint",
    "CubicEq",
    "FgCount",
    "FgIntersections",
    "FoldSolution",
    "GeneralCubic",
    "Line",
    "Normalization",
    "OracleDisagreement",
    "OrbitPoint",
    "OriginReport",
    "PlotScene",
    "Point",
    "Poly",
    "Segment",
    "SegmentRelation",
    "ShapeClass",
    "StructureReport",
    "Viewport",
    "WindingResult",
    "axis_ray_crossings",
    "build_loop",
    "build_scene",
    "cissoid",
    "classify",
    "classify_origin",
    "corrected_criterion",
    "count_distinct_real_roots",
    "critical_points",
    "export_orbit_csv",
    "f_eval",
    "fg_intersection_count",
    "fold_line",
    "fold_line_for",
    "gradient",
    "hessian_at_singular",
    "hessian_origin",
    "loop_from_points",
    "loop_range",
    "newton_census",
    "normalize",
    "ophiuride",
    "orbit",
    "paper_criterion",
    "real_roots",
    "render_svg",
    "root_from_fold",
    "segment_relation",
    "singular_scan",
    "solve_by_folding",
    "special_parameters",
    "structure_verdict",
    "tangent_at",
    "vanishes_at_a",
    "winding_number",
]
