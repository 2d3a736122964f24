"""Exact-ish planar primitives: points, normalized lines, segments, circles.

Everything downstream (fold construction, orbit checks, the three-way
contact oracle) reduces to reflections, perpendicular bisectors, sidedness
and segment intersection, so these few operations carry tight contracts:
reflection is an involution to ~1e-12 on moderate coordinates, and a
perpendicular bisector reflects one defining point onto the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateInput

EPS_GEOM = 1e-9


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise DegenerateInput(f"non-finite coordinate {v!r}")


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        _require_finite(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Line:
    """a*x + b*y + c = 0 with a**2 + b**2 = 1.

    The sign is fixed so the first nonzero of (a, b) is positive, which
    makes equal lines compare equal coefficient-wise.
    """

    a: float
    b: float
    c: float

    @staticmethod
    def from_coefficients(a: float, b: float, c: float) -> "Line":
        _require_finite(a, b, c)
        if a == 0.0 and b == 0.0:
            raise DegenerateInput("line needs a nonzero normal (a, b)")
        # pull out the power-of-two exponent first: triples that differ
        # by an exact power of two then normalize bitwise identically
        m = math.frexp(max(abs(a), abs(b)))[1]
        a, b, c = math.ldexp(a, -m), math.ldexp(b, -m), math.ldexp(c, -m)
        n = math.hypot(a, b)
        a, b, c = a / n, b / n, c / n
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        return Line(a, b, c)

    def eval(self, p: Point) -> float:
        """Signed distance of p from the line (normal is unit length)."""
        return self.a * p.x + self.b * p.y + self.c


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    @property
    def is_degenerate(self) -> bool:
        return self.p.x == self.q.x and self.p.y == self.q.y


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        _require_finite(self.radius)
        if self.radius < 0.0:
            raise DegenerateInput("negative radius")


class CirclePosition(Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


def reflect_point(p: Point, line: Line) -> Point:
    d = line.eval(p)
    return Point(p.x - 2.0 * d * line.a, p.y - 2.0 * d * line.b)


def perp_bisector(p: Point, q: Point) -> Line:
    """Locus of points equidistant from p and q.

    Coefficients are written down directly (not via midpoint/direction
    objects) so the construction stays symmetric in p and q up to sign.
    """
    if p.x == q.x and p.y == q.y:
        raise DegenerateInput("perpendicular bisector of coincident points")
    a = q.x - p.x
    b = q.y - p.y
    c = -0.5 * ((q.x * q.x - p.x * p.x) + (q.y * q.y - p.y * p.y))
    return Line.from_coefficients(a, b, c)


def side_of(line: Line, p: Point, tol: float = EPS_GEOM) -> int:
    """-1 / 0 / +1 by signed distance, with a dead band of width tol."""
    d = line.eval(p)
    if d > tol:
        return 1
    if d < -tol:
        return -1
    return 0


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0.0:
        return 1
    if v < 0.0:
        return -1
    return 0


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    # collinearity assumed by the caller; bounding-box containment suffices
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """Closed-segment intersection test, degenerate segments allowed."""
    a, b, c, d = s1.p, s1.q, s2.p, s2.q
    if s1.is_degenerate and s2.is_degenerate:
        return a.x == c.x and a.y == c.y
    if s1.is_degenerate:
        return _orient(c, d, a) == 0 and _on_segment(c, d, a)
    if s2.is_degenerate:
        return _orient(a, b, c) == 0 and _on_segment(a, b, c)

    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def point_segment_distance(p: Point, s: Segment) -> float:
    vx, vy = s.q.x - s.p.x, s.q.y - s.p.y
    wx, wy = p.x - s.p.x, p.y - s.p.y
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return p.distance_to(s.p)
    t = (wx * vx + wy * vy) / vv
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(wx - t * vx, wy - t * vy)


def position_wrt_circle(
    p: Point, circle: Circle, tol: float = EPS_GEOM
) -> CirclePosition:
    d = p.distance_to(circle.center)
    if abs(d - circle.radius) <= tol:
        return CirclePosition.ON
    if d < circle.radius:
        return CirclePosition.INSIDE
    return CirclePosition.OUTSIDE
