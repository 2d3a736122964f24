"""Solving x**3 - a*x**2 - b*x + c = 0 by a single simultaneous fold.

The construction uses two marked points, A = (-1, 0) and P = (b, a+c),
and two reference lines, x = 1 and y = a - c.  A crease that carries A
onto the line x = 1 and P onto the line y = a - c must be of the form
x + r*y - r**2 = 0, and its parameter r satisfies the cubic.  Solving is
therefore: take every real root r, and hand back the fold line together
with both image points and the residuals of the two incidence demands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, NotAFoldLine
from .geom import Line, Point, reflect_point
from .polyroots import Poly, real_roots

_ROUND_TRIP_TOL = 1e-9


@dataclass(frozen=True)
class CubicEq:
    """x**3 - a*x**2 - b*x + c, the sign convention used throughout."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if not math.isfinite(v):
                raise DegenerateInput(f"non-finite coefficient {v!r}")

    def __call__(self, x: float) -> float:
        return ((x - self.a) * x - self.b) * x + self.c

    def poly(self) -> Poly:
        return Poly.of(self.c, -self.b, -self.a, 1.0)

    @property
    def point_p(self) -> Point:
        return Point(self.b, self.a + self.c)


@dataclass(frozen=True)
class FoldSolution:
    r: float
    fold: Line
    a_image: Point
    p_image: Point
    residual_i: float  # distance of A's image from the line x = 1
    residual_ii: float  # distance of P's image from the line y = a - c


def fold_line(r: float) -> Line:
    """The crease x + r*y - r**2 = 0."""
    if not math.isfinite(r):
        raise DegenerateInput(f"non-finite fold parameter {r!r}")
    return Line.from_coefficients(1.0, r, -r * r)


def root_from_fold(line: Line) -> float:
    """Inverse of fold_line, rejecting lines outside the family."""
    if line.a <= 0.0:
        raise NotAFoldLine("fold lines are never vertical-normal-free")
    r = line.b / line.a
    if abs(line.c / line.a + r * r) > _ROUND_TRIP_TOL * (1.0 + r * r):
        raise NotAFoldLine(
            "constant term is not -(y-coefficient)**2 after scaling"
        )
    return r


def _images(eq: CubicEq, r: float) -> tuple[Line, Point, Point]:
    fold = fold_line(r)
    # A = (-1, 0) reflects to (1, 2r) exactly: the crease is the
    # perpendicular bisector of that pair by construction
    a_image = Point(1.0, 2.0 * r)
    p_image = reflect_point(eq.point_p, fold)
    return fold, a_image, p_image


def verify_fold(eq: CubicEq, r: float) -> tuple[float, float, float]:
    """(residual_i, residual_ii, cubic_residual) for the crease at r."""
    _, a_image, p_image = _images(eq, r)
    return (
        abs(a_image.x - 1.0),
        abs(p_image.y - (eq.a - eq.c)),
        abs(eq(r)),
    )


def solve_by_folding(eq: CubicEq) -> list[FoldSolution]:
    """One FoldSolution per distinct real root, ascending in r."""
    out = []
    for r, _ in real_roots(eq.poly()):
        fold, a_image, p_image = _images(eq, r)
        out.append(
            FoldSolution(
                r=r,
                fold=fold,
                a_image=a_image,
                p_image=p_image,
                residual_i=abs(a_image.x - 1.0),
                residual_ii=abs(p_image.y - (eq.a - eq.c)),
            )
        )
    return out
