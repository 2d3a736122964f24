"""The envelope parabola 4x + y**2 = 0 and its contact with the curve.

Creases of the alpha = 2 frame are exactly the tangent lines of this
parabola (focus (-1, 0), directrix x = 1), touching it at (-r**2, 2r).
Counting real intersections of the curve with the parabola reduces to
counting distinct real roots of a single degree-6 polynomial

    N(r) = 4*S(r)*(r**2 + 1) + T(r)**2,

where S, T are the orbit numerators; its root count is 0, 1 or 2 and
tracks the shape of the singularity.  The only other real point of the
curve besides the orbit image is P itself, and 4p + q**2 is literally
the parabola's defining form evaluated at P, so P contributes an extra
intersection only in the boundary case where the single root already
witnesses it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .curve import BelochParams
from .errors import DegenerateInput
from .geom import Line, Point
from .polyroots import Poly, real_roots

_EPS_SIDE = 1e-9


class ParabolaSide(Enum):
    LEFT = "left"
    ON = "on"
    RIGHT = "right"


class FgCount(Enum):
    ZERO = "zero"
    ONE = "one"
    TWO_OR_MORE = "two_or_more"


@dataclass(frozen=True)
class FgIntersections:
    count: FgCount
    witnesses: tuple[float, ...]  # fold parameters r with orbit(r) on G


def point_on(r: float) -> Point:
    if not math.isfinite(r):
        raise DegenerateInput(f"non-finite parameter {r!r}")
    return Point(-r * r, 2.0 * r)


def tangent_at(r: float) -> Line:
    """Tangent of 4x + y**2 = 0 at (-r**2, 2r), via the gradient (4, 2y).

    The raw coefficients are (4, 4r, -4r**2), an exact power-of-two
    multiple of the crease's (1, r, -r**2), so after normalization this
    is bitwise the same Line as the crease at r.
    """
    if not math.isfinite(r):
        raise DegenerateInput(f"non-finite parameter {r!r}")
    return Line.from_coefficients(4.0, 4.0 * r, -4.0 * (r * r))


def side_of_parabola(pt: Point, tol: float = _EPS_SIDE) -> ParabolaSide:
    g = 4.0 * pt.x + pt.y * pt.y
    band = tol * (1.0 + abs(pt.x) + pt.y * pt.y)
    if g > band:
        return ParabolaSide.RIGHT
    if g < -band:
        return ParabolaSide.LEFT
    return ParabolaSide.ON


def contact_poly(params: BelochParams) -> Poly:
    """N(r) as above; integer-combination coefficients, degree 6 always."""
    if params.alpha != 2.0:
        raise ValueError("contact counting is stated in the alpha = 2 frame")
    p, q = params.p, params.q
    s_num = Poly.of(-p, -2.0 * q, 2.0 + p)
    t_num = Poly.of(q, -2.0 * p, -q, 2.0)
    return (s_num * Poly.of(1.0, 0.0, 1.0)).scaled(4.0) + t_num * t_num


def fg_intersection_count(params: BelochParams) -> FgIntersections:
    """Distinct real contacts of curve and parabola, with r witnesses."""
    witnesses = tuple(r for r, _ in real_roots(contact_poly(params)))
    if len(witnesses) == 0:
        count = FgCount.ZERO
    elif len(witnesses) == 1:
        count = FgCount.ONE
    else:
        count = FgCount.TWO_OR_MORE
    return FgIntersections(count=count, witnesses=witnesses)
