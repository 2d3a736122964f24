"""Closed node loops, winding numbers, and axis-ray crossing counts.

When the curve has a node, the fold parameters between the two special
values sweep a closed loop from P back to P.  The loop is polygonalized
by sampling r; the winding number around a query point comes from
accumulated signed turning, with offending segments (turn >= pi/2)
re-sampled by bisection in r until the polyline is tame.  A center the
loop passes through within 1e-9 gets the honest answer: undefined.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .curve import BelochParams, OrbitPoint, orbit, special_parameters
from .errors import (
    BadRange,
    DegenerateInput,
    NotANode,
    OracleDisagreement,
    RefinementLimit,
    TangentialCrossing,
)
from .geom import EPS_GEOM, Point, Segment, point_segment_distance

_MAX_ANGLE = 0.5 * math.pi
_CLOSURE_TOL = 1e-8


@dataclass(frozen=True)
class ClosedLoop:
    samples: tuple[OrbitPoint, ...]
    closed: bool
    params: BelochParams | None = None


@dataclass(frozen=True)
class WindingResult:
    value: int | None  # None means undefined: loop meets the center
    min_distance: float
    samples_used: int


def loop_range(params: BelochParams) -> tuple[float, float]:
    """Parameter interval [r-, r+] of the closed loop; nodes only."""
    if params.discriminant <= params.classification_band():
        raise NotANode("closed loop exists only for a self-intersecting curve")
    lo, hi = special_parameters(params)
    return lo, hi


def build_loop(params: BelochParams, n: int = 1024) -> ClosedLoop:
    if n < 2:
        raise BadRange("need at least two samples")
    lo, hi = loop_range(params)
    samples = tuple(
        orbit(params, lo + (hi - lo) * k / (n - 1)) for k in range(n)
    )
    big_p = params.point_p
    scale = 1.0 + abs(params.p) + abs(params.q)
    for end in (samples[0], samples[-1]):
        if end.point.distance_to(big_p) > _CLOSURE_TOL * scale:
            raise OracleDisagreement(
                f"loop endpoint at r={end.r!r} missed P by "
                f"{end.point.distance_to(big_p)!r}"
            )
    return ClosedLoop(samples=samples, closed=True, params=params)


def loop_from_points(points, closed: bool = True) -> ClosedLoop:
    """Wrap an explicit polyline (e.g. a test square) as a loop."""
    samples = tuple(
        OrbitPoint(r=float(i), s=pt.x, t=pt.y) for i, pt in enumerate(points)
    )
    if len(samples) < 3:
        raise BadRange("need at least three points")
    return ClosedLoop(samples=samples, closed=closed, params=None)


def _cyclic_points(loop: ClosedLoop) -> list[OrbitPoint]:
    """Vertex list to be read cyclically; drops a duplicated endpoint."""
    pts = list(loop.samples)
    if len(pts) > 2 and pts[0].point.distance_to(pts[-1].point) <= 1e-7 * (
        1.0 + abs(pts[0].s) + abs(pts[0].t)
    ):
        pts = pts[:-1]
    return pts


def _midpoint(loop: ClosedLoop, a: OrbitPoint, b: OrbitPoint) -> OrbitPoint:
    if loop.params is not None:
        return orbit(loop.params, 0.5 * (a.r + b.r))
    return OrbitPoint(
        r=0.5 * (a.r + b.r), s=0.5 * (a.s + b.s), t=0.5 * (a.t + b.t)
    )


def winding_number(
    loop: ClosedLoop, center: Point, max_refine: int = 20
) -> WindingResult:
    """Turns of the loop around center, by adaptive angle accumulation.

    Raises RefinementLimit if max_refine rounds of bisection cannot get
    every angular step below pi/2; reports value None when the polyline
    comes within EPS_GEOM of the center, where the count is meaningless.
    """
    if not loop.closed:
        raise DegenerateInput("winding number needs a closed loop")
    pts = _cyclic_points(loop)
    for round_no in range(max_refine + 1):
        n = len(pts)
        min_dist = math.inf
        total = 0.0
        offenders: list[int] = []
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            min_dist = min(
                min_dist,
                point_segment_distance(center, Segment(a.point, b.point)),
            )
            ux, uy = a.s - center.x, a.t - center.y
            vx, vy = b.s - center.x, b.t - center.y
            dth = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
            total += dth
            if abs(dth) >= _MAX_ANGLE:
                offenders.append(i)
        if min_dist <= EPS_GEOM:
            return WindingResult(value=None, min_distance=min_dist, samples_used=n)
        if not offenders:
            k = round(total / (2.0 * math.pi))
            if abs(total / (2.0 * math.pi) - k) < 0.01:
                return WindingResult(
                    value=int(k), min_distance=min_dist, samples_used=n
                )
            # tame steps but a fractional total would mean a broken loop
            raise OracleDisagreement(
                f"angle sum {total!r} is not near a multiple of 2*pi"
            )
        if round_no == max_refine:
            break
        refined: list[OrbitPoint] = []
        offender_set = set(offenders)
        for i in range(n):
            refined.append(pts[i])
            if i in offender_set:
                refined.append(_midpoint(loop, pts[i], pts[(i + 1) % n]))
        pts = refined
    raise RefinementLimit(
        f"{max_refine} refinement rounds did not tame the polyline "
        f"around {center!r}"
    )


def _refine_crossing(
    loop: ClosedLoop, a: OrbitPoint, b: OrbitPoint, cy: float, horizontal: bool
) -> tuple[float, float]:
    """Locate the axis crossing on segment a-b; returns (along, perp-ish)."""

    def coord(o: OrbitPoint) -> float:
        return (o.t if horizontal else o.s) - cy

    fa, fb = coord(a), coord(b)
    if loop.params is not None:
        ra, rb = a.r, b.r
        for _ in range(80):
            rm = 0.5 * (ra + rb)
            om = orbit(loop.params, rm)
            fm = coord(om)
            if fm == 0.0:
                break
            if (fm > 0.0) == (fa > 0.0):
                ra, fa = rm, fm
            else:
                rb, fb = rm, fm
        om = orbit(loop.params, 0.5 * (ra + rb))
        return (om.s, om.t) if horizontal else (om.t, om.s)
    # synthetic loop: linear interpolation along the chord
    w = fa / (fa - fb)
    s = a.s + w * (b.s - a.s)
    t = a.t + w * (b.t - a.t)
    return (s, t) if horizontal else (t, s)


def axis_ray_crossings(
    loop: ClosedLoop, center: Point
) -> tuple[int, int, int, int]:
    """Transversal crossing counts of the four axis rays from center.

    Returned in (east, north, west, south) order.  Samples sitting on an
    axis within tolerance are tangential events: they are counted by the
    neighbouring-sign rule (opposite signs around the touch count one
    crossing, equal signs none) and reported as a TangentialCrossing
    warning rather than an error.
    """
    if not loop.closed:
        raise DegenerateInput("ray crossings need a closed loop")
    pts = _cyclic_points(loop)
    n = len(pts)
    counts = [0, 0, 0, 0]  # east, north, west, south
    for horizontal in (True, False):
        axis_c = center.y if horizontal else center.x
        side_c = center.x if horizontal else center.y
        tol_axis = EPS_GEOM * (1.0 + abs(axis_c))
        tol_side = EPS_GEOM * (1.0 + abs(side_c))

        def perp(o: OrbitPoint) -> float:
            return (o.t if horizontal else o.s) - axis_c

        signs = []
        for o in pts:
            v = perp(o)
            signs.append(0 if abs(v) <= tol_axis else (1 if v > 0.0 else -1))
        nz = [i for i in range(n) if signs[i] != 0]
        if not nz:
            warnings.warn(
                "entire loop lies on the axis within tolerance",
                TangentialCrossing,
            )
            continue
        for k, i in enumerate(nz):
            j = nz[(k + 1) % len(nz)]
            gap = (j - i) % n
            if gap == 0:
                continue
            if signs[i] == signs[j]:
                if gap > 1:
                    # the loop touched the axis and came back: tangential
                    warnings.warn(
                        "non-transversal axis contact", TangentialCrossing
                    )
                continue
            if gap > 1:
                # crossing passes through on-axis samples; place it there
                mid = pts[(i + (gap + 1) // 2) % n]
                along = (mid.s if horizontal else mid.t) - side_c
                warnings.warn(
                    "crossing through an on-axis sample", TangentialCrossing
                )
            else:
                a, b = pts[i], pts[j]
                s_along, _ = _refine_crossing(loop, a, b, axis_c, horizontal)
                along = s_along - side_c
            if abs(along) <= tol_side:
                warnings.warn(
                    "crossing at the ray origin", TangentialCrossing
                )
                continue
            if horizontal:
                counts[0 if along > 0.0 else 2] += 1
            else:
                counts[1 if along > 0.0 else 3] += 1
    return tuple(counts)  # type: ignore[return-value]
