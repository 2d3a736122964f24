"""Critical points of z = F(x, y) and the structure of its landscape.

In the alpha = 2 frame, grad F = 0 reduces by eliminating x from
F_y = 0 (which gives p - x = 2(q - y)/y off the axis) to

    (q - y) * (y**3 + q*y**2 + (8p + 12)*y - 12q) = 0,

so the critical set is P itself (the factor y = q) plus one point per
real root y of the cubic factor.  At such a root the cubic relation
rewrites 2(q - y)/y as (y**2 + q*y + 8p)/6, a form with no pole, so
the abscissa x = p - (y**2 + q*y + 8p)/6 is usable for every root;
the y = 0 root that appears when q = 0 lands on the degenerate branch
x = -p/3 automatically.  The census is exact closed-form root finding;
a grid-seeded Newton scan over the gradient field is the independent
check, not the source of truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .curve import BelochParams, f_eval, gradient, gradient_zeros
from .errors import OracleDisagreement
from .geom import Point
from .polyroots import Poly, real_roots

_EPS = 1e-9
_MERGE = 1e-6


class CriticalKind(Enum):
    LOCAL_MIN = "local_min"
    LOCAL_MAX = "local_max"
    SADDLE = "saddle"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CriticalPoint:
    location: Point
    value: float  # z = F there
    kind: CriticalKind
    hessian_det: float
    fxx: float


@dataclass(frozen=True)
class StructureReport:
    sign_class: int  # sign of D = 4p + q**2
    points: tuple[CriticalPoint, ...]
    extremum_count: int
    saddle_count: int
    degenerate_count: int
    matches_structure: bool
    observed_polarity: str | None  # kind of the off-P extremum, if any
    notes: tuple[str, ...]


def _classify_hessian(params: BelochParams, x: float, y: float) -> tuple:
    p = params.p
    fxx = 2.0 * p - 6.0 * x
    fyy = 2.0 * params.alpha + 2.0 * (p - x)
    fxy = -2.0 * y
    det = fxx * fyy - fxy * fxy
    scale = 1.0 + abs(fxx) + abs(fyy) + abs(fxy)
    band = _EPS * scale * scale
    if det < -band:
        kind = CriticalKind.SADDLE
    elif det > band:
        if fxx > 0.0:
            kind = CriticalKind.LOCAL_MIN
        elif fxx < 0.0:
            kind = CriticalKind.LOCAL_MAX
        else:
            kind = CriticalKind.DEGENERATE
    else:
        kind = CriticalKind.DEGENERATE
    return kind, det, fxx


def critical_cubic(params: BelochParams) -> Poly:
    """y**3 + q*y**2 + (8p + 12)*y - 12q, the off-P critical ordinates."""
    if params.alpha != 2.0:
        raise ValueError("the critical census is stated in the alpha = 2 frame")
    p, q = params.p, params.q
    return Poly.of(-12.0 * q, 8.0 * p + 12.0, q, 1.0)


def critical_points(params: BelochParams) -> list[CriticalPoint]:
    """All critical points of F, sorted by (y, x); alpha = 2 only.

    Locations come from the closed-form factorization above; every
    returned point has |grad F| below 1e-8 * scale as a safety check.
    """
    p, q = params.p, params.q
    candidates: list[Point] = [Point(p, q)]
    for y, _ in real_roots(critical_cubic(params)):
        # pole-free abscissa, valid at exact roots of the cubic
        candidates.append(Point(p - (y * y + q * y + 8.0 * p) / 6.0, y))

    merged: list[Point] = []
    for pt in candidates:
        if all(pt.distance_to(m) > _MERGE for m in merged):
            merged.append(pt)
    merged.sort(key=lambda pt: (pt.y, pt.x))

    scale = (1.0 + abs(p) + abs(q)) ** 2
    out = []
    for pt in merged:
        gx, gy = gradient(params, pt.x, pt.y)
        if math.hypot(gx, gy) > 1e-8 * scale * (1.0 + pt.x * pt.x + pt.y * pt.y):
            raise OracleDisagreement(
                f"closed-form critical point {pt!r} fails the gradient check"
            )
        kind, det, fxx = _classify_hessian(params, pt.x, pt.y)
        out.append(
            CriticalPoint(
                location=pt,
                value=f_eval(params, pt.x, pt.y),
                kind=kind,
                hessian_det=det,
                fxx=fxx,
            )
        )
    return out


def newton_census(
    params: BelochParams,
    window: tuple[float, float, float, float] = (-10.0, -10.0, 10.0, 10.0),
    grid_n: int = 32,
) -> list[Point]:
    """Independent census oracle: damped Newton on grad F from a seed grid."""
    return gradient_zeros(params, window, grid_n)


def structure_verdict(params: BelochParams) -> StructureReport:
    """Compare the observed critical landscape against the expected rows.

    Expected structure by the sign of D = 4p + q**2:
      D < 0: extremum at P plus exactly one saddle elsewhere;
      D = 0: P is the only critical point, no interior extremum;
      D > 0: saddle at P plus exactly one interior extremum.
    The interior extremum's observed polarity is reported as found (it
    comes out a local minimum: F_xx = 2p - 6x > 0 at that point), and
    any row mismatch, such as the extra axis pair that appears for
    q = 0 and p < -3/2, is flagged rather than absorbed.
    """
    d = params.discriminant
    band = params.classification_band()
    sign_class = 0 if abs(d) <= band else (1 if d > 0.0 else -1)
    pts = tuple(critical_points(params))
    big_p = params.point_p

    def at_p(cp: CriticalPoint) -> bool:
        return cp.location.distance_to(big_p) <= _MERGE

    extrema = [
        cp
        for cp in pts
        if cp.kind in (CriticalKind.LOCAL_MIN, CriticalKind.LOCAL_MAX)
    ]
    saddles = [cp for cp in pts if cp.kind is CriticalKind.SADDLE]
    degens = [cp for cp in pts if cp.kind is CriticalKind.DEGENERATE]
    notes: list[str] = []

    if sign_class < 0:
        matches = (
            len(pts) == 2
            and len(extrema) == 1
            and at_p(extrema[0])
            and len(saddles) == 1
            and not at_p(saddles[0])
        )
        polarity = extrema[0].kind.value if len(extrema) == 1 else None
    elif sign_class > 0:
        matches = (
            len(pts) == 2
            and len(saddles) == 1
            and at_p(saddles[0])
            and len(extrema) == 1
            and not at_p(extrema[0])
        )
        polarity = extrema[0].kind.value if len(extrema) == 1 else None
        if matches:
            notes.append(
                "interior extremum observed as a "
                + extrema[0].kind.value.replace("_", " ")
                + " (F_xx = "
                + format(extrema[0].fxx, ".6g")
                + " there)"
            )
    else:
        matches = len(pts) == 1 and at_p(pts[0]) and not extrema
        polarity = None
        notes.append(
            "at the boundary the Hessian at P is singular; the landscape "
            "has no interior extremum and P is the only critical point"
        )
    if not matches:
        notes.append(
            "critical landscape does not match the expected row structure: "
            f"{len(pts)} points, {len(extrema)} extrema, "
            f"{len(saddles)} saddles, {len(degens)} degenerate"
        )
    return StructureReport(
        sign_class=sign_class,
        points=pts,
        extremum_count=len(extrema),
        saddle_count=len(saddles),
        degenerate_count=len(degens),
        matches_structure=matches,
        observed_polarity=polarity,
        notes=tuple(notes),
    )
