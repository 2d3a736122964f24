"""The singular cubic swept by fold images, and its local geometry.

Fix P = (p, q) and a scale alpha > 0.  Reflecting A = (-alpha/2, 0)
across the crease x + r*y - (alpha/2)*r**2 = 0 and then reflecting P
across the same crease sweeps, as r varies, the real cubic

    F(x, y) = alpha*(q - y)**2 - (q + y)*(q - y)*(p - x)
              - (p - x)**2 * (p + x) = 0,

which always passes through P and is singular there.  The sign of
D = 2*alpha*p + q**2 sorts the three local shapes: isolated point,
cusp, node.  alpha = 2 is the frame the fold construction for cubics
actually uses; everything here keeps alpha symbolic except the two
axis sections, whose closed-form coefficients are stated for alpha = 2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateInput, OracleDisagreement
from .geom import (
    EPS_GEOM,
    Circle,
    CirclePosition,
    Line,
    Point,
    Segment,
    position_wrt_circle,
    segments_intersect,
)
from .polyroots import Poly

log = logging.getLogger(__name__)

EPS_CLS = 1e-9
_SAMPLING_RADII = (1e-3, 1e-2, 1e-1)
_SAMPLING_N = 2048


class ShapeClass(Enum):
    ISOLATED_POINT = "isolated_point"
    CUSP = "cusp"
    NODE = "node"
    DEGENERATE = "degenerate"


class SegmentRelation(Enum):
    INTERSECT = "intersect"
    COINCIDE = "coincide"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class BelochParams:
    p: float
    q: float
    alpha: float = 2.0

    def __post_init__(self):
        for v in (self.p, self.q, self.alpha):
            if not math.isfinite(v):
                raise DegenerateInput(f"non-finite parameter {v!r}")
        if self.alpha <= 0.0:
            raise DegenerateInput("alpha must be positive")

    @property
    def discriminant(self) -> float:
        """D = 2*alpha*p + q**2; equals 4p + q**2 in the alpha = 2 frame."""
        return (2.0 * self.alpha) * self.p + self.q * self.q

    @property
    def point_p(self) -> Point:
        return Point(self.p, self.q)

    @property
    def point_a(self) -> Point:
        return Point(-0.5 * self.alpha, 0.0)

    def classification_band(self) -> float:
        return EPS_CLS * (1.0 + abs(self.p) + self.q * self.q)


@dataclass(frozen=True)
class OrbitPoint:
    r: float
    s: float
    t: float

    @property
    def point(self) -> Point:
        return Point(self.s, self.t)


def f_eval(params: BelochParams, x: float, y: float) -> float:
    p, q, al = params.p, params.q, params.alpha
    dy = q - y
    dx = p - x
    return al * dy * dy - (q + y) * dy * dx - dx * dx * (p + x)


def gradient(params: BelochParams, x: float, y: float) -> tuple[float, float]:
    p, q, al = params.p, params.q, params.alpha
    fx = (q + y) * (q - y) + (p - x) * (p + 3.0 * x)
    fy = -2.0 * al * (q - y) + 2.0 * y * (p - x)
    return fx, fy


def hessian_at_singular(params: BelochParams) -> float:
    """det Hess F at P; equals -4*(4p + q**2) bitwise when alpha = 2.

    Written as (F_xx)(F_yy) - F_xy**2 evaluated at P, where the factors
    collapse to -4p, 2*alpha and -2q.  For alpha = 2 every factor is a
    power-of-two multiple, so the rounding agrees with -4*(4p + q**2)
    term for term, not merely to tolerance.
    """
    p, q, al = params.p, params.q, params.alpha
    return (-4.0 * p) * (2.0 * al) - (2.0 * q) * (2.0 * q)


def orbit(params: BelochParams, r: float) -> OrbitPoint:
    """Image of P under the crease at r, in closed form.

    Agrees with reflecting P across fold_line_for(params, r) to roughly
    machine precision; the closed form avoids the cancellation in the
    reflection when r is large.
    """
    if not math.isfinite(r):
        raise DegenerateInput(f"non-finite orbit parameter {r!r}")
    p, q, al = params.p, params.q, params.alpha
    r2 = r * r
    den = r2 + 1.0
    s = ((al + p) * r2 - 2.0 * q * r - p) / den
    t = (al * r2 * r - q * r2 - 2.0 * p * r + q) / den
    return OrbitPoint(r=r, s=s, t=t)


def fold_line_for(params: BelochParams, r: float) -> Line:
    """The crease x + r*y - (alpha/2)*r**2 = 0 in this frame."""
    if not math.isfinite(r):
        raise DegenerateInput(f"non-finite fold parameter {r!r}")
    return Line.from_coefficients(1.0, r, -0.5 * params.alpha * r * r)


def special_parameters(params: BelochParams) -> list[float]:
    """Fold parameters whose image is P itself: (q +- sqrt(D)) / alpha.

    Zero, one or two values as D = 2*alpha*p + q**2 is negative, zero
    (within the classification band) or positive.
    """
    d = params.discriminant
    band = params.classification_band()
    if abs(d) <= band:
        return [params.q / params.alpha]
    if d < 0.0:
        return []
    root = math.sqrt(d)
    lo = (params.q - root) / params.alpha
    hi = (params.q + root) / params.alpha
    return [lo, hi]


def circle_sign_flips(f, cx: float, cy: float, radius: float, n: int = _SAMPLING_N) -> int:
    """Cyclic sign changes of f on the circle of given radius around (cx, cy).

    0 / 2 / 4 flips distinguish an isolated point, a cusp and a node of
    the zero set at the centre, provided the radius is small enough to
    stay in the local regime.  Exact zeros on the circle are skipped.
    """
    signs = []
    for k in range(n):
        th = 2.0 * math.pi * k / n
        v = f(cx + radius * math.cos(th), cy + radius * math.sin(th))
        if v != 0.0:
            signs.append(1 if v > 0.0 else -1)
    return sum(1 for i in range(len(signs)) if signs[i] != signs[i - 1])


def local_sign_flips(params: BelochParams, radius: float, n: int = _SAMPLING_N) -> int:
    return circle_sign_flips(
        lambda x, y: f_eval(params, x, y), params.p, params.q, radius, n
    )


def classify(params: BelochParams) -> ShapeClass:
    """Shape of the curve near P by the sign of D, sampling the band.

    Strictly signed D decides directly.  Inside the tolerance band the
    verdict comes from sign counting on small punctured circles: a cusp
    shows exactly two sign changes at every radius; anything else is
    reported as degenerate rather than guessed.
    """
    d = params.discriminant
    band = params.classification_band()
    if d > band:
        return ShapeClass.NODE
    if d < -band:
        return ShapeClass.ISOLATED_POINT
    flips = {local_sign_flips(params, rho) for rho in _SAMPLING_RADII}
    if flips == {2}:
        return ShapeClass.CUSP
    return ShapeClass.DEGENERATE


def vanishes_at_a(params: BelochParams, tol: float = EPS_GEOM) -> bool:
    """Does the curve pass through A?  Happens exactly when p = alpha/2."""
    scale = 1.0 + abs(params.p) + abs(params.q) + 0.5 * params.alpha
    value = f_eval(params, -0.5 * params.alpha, 0.0)
    return abs(value) <= tol * scale * scale * scale


def segment_relation(
    params: BelochParams, r: float, tol: float = EPS_GEOM
) -> SegmentRelation:
    """Contact between segments A P and A' P' by three independent tests.

    (1) literal segment intersection, (2) position of A' relative to the
    circle centred at P through A, (3) comparison of x-coordinates p and
    s.  All three reduce analytically to the sign of the same quantity
    2p + 2qr - alpha*r**2, so a real disagreement means a defect and is
    raised, never smoothed over.  Near the common zero the tests may
    resolve tolerance bands differently; if at least one reports contact
    and the rest agree with each other, the contact verdict wins.
    """
    p, q, al = params.p, params.q, params.alpha
    a = params.point_a
    a_image = Point(0.5 * al, al * r)
    big_p = params.point_p
    o = orbit(params, r)
    p_image = o.point

    scale = 1.0 + abs(p) + abs(q) + 0.5 * al * (1.0 + r * r)

    if p_image.distance_to(big_p) <= tol * scale:
        by_segments = SegmentRelation.COINCIDE
    elif segments_intersect(Segment(a, big_p), Segment(a_image, p_image)):
        by_segments = SegmentRelation.INTERSECT
    else:
        by_segments = SegmentRelation.DISJOINT

    radius = a.distance_to(big_p)
    pos = position_wrt_circle(a_image, Circle(big_p, radius), tol * scale)
    by_circle = {
        CirclePosition.ON: SegmentRelation.COINCIDE,
        CirclePosition.INSIDE: SegmentRelation.INTERSECT,
        CirclePosition.OUTSIDE: SegmentRelation.DISJOINT,
    }[pos]

    dx = p - o.s
    if abs(dx) <= tol * (1.0 + abs(p) + abs(o.s)):
        by_coordinate = SegmentRelation.COINCIDE
    elif dx > 0.0:
        by_coordinate = SegmentRelation.INTERSECT
    else:
        by_coordinate = SegmentRelation.DISJOINT

    verdicts = {by_segments, by_circle, by_coordinate}
    if len(verdicts) == 1:
        return by_segments
    strict = verdicts - {SegmentRelation.COINCIDE}
    if len(strict) <= 1 and SegmentRelation.COINCIDE in verdicts:
        return SegmentRelation.COINCIDE
    raise OracleDisagreement(
        f"segment relation split at r={r!r}, p={p!r}, q={q!r}, "
        f"alpha={al!r}: segments={by_segments.value}, "
        f"circle={by_circle.value}, coordinate={by_coordinate.value}"
    )


def section_polys(params: BelochParams) -> tuple[Poly, Poly]:
    """(F(-1, t) in t, F(s, 0) in s) as explicit polynomials; alpha = 2.

    F(-1, t) = (3+p) t**2 - 4q t + (1 + p - p**2 - p**3 + q**2 - p q**2)
    F(s, 0)  = -s**3 + p s**2 + (p**2 + q**2) s + (2q**2 - p q**2 - p**3)
    """
    if params.alpha != 2.0:
        raise ValueError("axis sections are stated in the alpha = 2 frame")
    p, q = params.p, params.q
    through_a = Poly.of(
        1.0 + p - p * p - p * p * p + q * q - p * q * q,
        -4.0 * q,
        3.0 + p,
    )
    axis = Poly.of(
        2.0 * q * q - p * q * q - p * p * p,
        p * p + q * q,
        p,
        -1.0,
    )
    return through_a, axis


def _hessian_matrix(params: BelochParams, x: float, y: float):
    p, al = params.p, params.alpha
    return (2.0 * p - 6.0 * x, -2.0 * y, 2.0 * al + 2.0 * (p - x))


def gradient_zeros(
    params: BelochParams,
    window: tuple[float, float, float, float] = (-8.0, -8.0, 8.0, 8.0),
    grid_n: int = 32,
    tol: float = 1e-11,
) -> list[Point]:
    """All zeros of grad F in the window, by grid-seeded damped Newton.

    Duplicates are merged at 1e-6; seeds that fail to converge are
    normal and only logged.  Used both as the critical-point oracle and,
    after membership filtering, for the singular-point scan.
    """
    x0, y0, x1, y1 = window
    if not (x0 < x1 and y0 < y1):
        raise DegenerateInput("empty scan window")
    gtol = tol * (1.0 + abs(params.p) + params.q * params.q)
    found: list[Point] = []
    misses = 0
    for i in range(grid_n):
        for j in range(grid_n):
            x = x0 + (x1 - x0) * (i + 0.5) / grid_n
            y = y0 + (y1 - y0) * (j + 0.5) / grid_n
            ok = False
            for _ in range(60):
                fx, fy = gradient(params, x, y)
                gn = math.hypot(fx, fy)
                if gn <= gtol:
                    ok = True
                    break
                hxx, hxy, hyy = _hessian_matrix(params, x, y)
                det = hxx * hyy - hxy * hxy
                if det == 0.0:
                    break
                dx = (-fx * hyy + fy * hxy) / det
                dy = (-fy * hxx + fx * hxy) / det
                lam = 1.0
                for _ in range(8):
                    nx, ny = x + lam * dx, y + lam * dy
                    nfx, nfy = gradient(params, nx, ny)
                    if math.hypot(nfx, nfy) < gn:
                        break
                    lam *= 0.5
                x, y = x + lam * dx, y + lam * dy
                if not (math.isfinite(x) and math.isfinite(y)):
                    break
            if not ok:
                misses += 1
                continue
            # the gradient tolerance admits a whole flat basin around a
            # degenerate zero; polish with full Newton steps (linear
            # convergence there) so duplicates land within merge range
            bx, by = x, y
            bgn = math.hypot(*gradient(params, x, y))
            for _ in range(40):
                fx, fy = gradient(params, x, y)
                hxx, hxy, hyy = _hessian_matrix(params, x, y)
                det = hxx * hyy - hxy * hxy
                if det == 0.0:
                    break
                x += (-fx * hyy + fy * hxy) / det
                y += (-fy * hxx + fx * hxy) / det
                if not (math.isfinite(x) and math.isfinite(y)):
                    break
                gn = math.hypot(*gradient(params, x, y))
                if gn > bgn:
                    break
                bx, by, bgn = x, y, gn
            x, y = bx, by
            if not (x0 - 1e-6 <= x <= x1 + 1e-6 and y0 - 1e-6 <= y <= y1 + 1e-6):
                continue
            if all(math.hypot(x - f.x, y - f.y) > 1e-6 for f in found):
                found.append(Point(x, y))
    if misses:
        log.debug("gradient scan: %d seeds did not converge", misses)
    found.sort(key=lambda pt: (pt.y, pt.x))
    return found


def singular_scan(
    params: BelochParams,
    window: tuple[float, float, float, float] = (-8.0, -8.0, 8.0, 8.0),
    grid_n: int = 32,
) -> list[Point]:
    """Singular points of the curve in the window: grad F = 0 and F = 0."""
    scale = 1.0 + abs(params.p) + abs(params.q)
    ftol = EPS_GEOM * scale * scale * scale
    return [
        pt
        for pt in gradient_zeros(params, window, grid_n)
        if abs(f_eval(params, pt.x, pt.y)) <= ftol
    ]
