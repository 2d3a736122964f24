"""Classifying the origin singularity of a0*y**2 = a1*x*y**2 + a2*x*y + a3*x**2 + a4*x**3.

Rescaling x by a1*beta with beta = sqrt(a4/a1**3) turns the curve into
the fold-frame form alpha*y**2 - x*y**2 - 2q*x*y - 2p*x**2 - x**3 = 0
with alpha = a0*beta, p = a3/(2*a1**2*beta), q = a2/(2*a1), so the
origin is a singular point and its shape follows the sign of
D = 2*alpha*p + q**2 = (4*a0*a3 + a2**2) / (4*a1**2).

A shortcut criterion floating around for this family,
2*a3/sqrt(a1*a4) + (a2/(2*a1))**2, equals 4p + q**2, which only matches
D when alpha = 2 or a3 = 0.  Both values are reported side by side and
a sign disagreement is flagged rather than silently resolved; the
Hessian determinant -4*a0*a3 - a2**2 and punctured-disk sampling are
the arbiters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curve import BelochParams, ShapeClass, circle_sign_flips
from .errors import DegenerateInput, SignObstruction, ZeroCoefficient

_EPS = 1e-9
_SAMPLING_RADII = (1e-3, 1e-2, 1e-1)


@dataclass(frozen=True)
class GeneralCubic:
    a0: float
    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self):
        for v in (self.a0, self.a1, self.a2, self.a3, self.a4):
            if not math.isfinite(v):
                raise DegenerateInput(f"non-finite coefficient {v!r}")

    def __call__(self, x: float, y: float) -> float:
        return (
            self.a0 * y * y
            - self.a1 * x * y * y
            - self.a2 * x * y
            - self.a3 * x * x
            - self.a4 * x * x * x
        )


@dataclass(frozen=True)
class Normalization:
    beta: float
    alpha: float
    p: float
    q: float

    def to_params(self) -> BelochParams:
        """The fold-frame parameters; requires alpha > 0 (i.e. a0 > 0)."""
        return BelochParams(p=self.p, q=self.q, alpha=self.alpha)


@dataclass(frozen=True)
class OriginReport:
    paper_value: float  # 2*a3/sqrt(a1*a4) + (a2/(2*a1))**2, i.e. 4p + q**2
    corrected_value: float  # 2*alpha*p + q**2 = (4*a0*a3 + a2**2)/(4*a1**2)
    hessian_det: float  # -4*a0*a3 - a2**2
    shape: ShapeClass
    discrepancy: bool  # decisive sign disagreement between the two values


def normalize(c: GeneralCubic) -> Normalization:
    for name, v in (("a0", c.a0), ("a1", c.a1), ("a4", c.a4)):
        if v == 0.0:
            raise ZeroCoefficient(f"{name} must be nonzero to normalize")
    if c.a1 * c.a4 < 0.0:
        raise SignObstruction("a1*a4 < 0: the rescaling square root is imaginary")
    beta = math.sqrt(c.a4 / (c.a1 * c.a1 * c.a1))
    return Normalization(
        beta=beta,
        alpha=c.a0 * beta,
        p=c.a3 / (2.0 * c.a1 * c.a1 * beta),
        q=c.a2 / (2.0 * c.a1),
    )


def paper_criterion(c: GeneralCubic) -> float:
    if c.a1 == 0.0 or c.a4 == 0.0:
        raise ZeroCoefficient("a1 and a4 must be nonzero")
    if c.a1 * c.a4 < 0.0:
        raise SignObstruction("a1*a4 < 0: criterion square root is imaginary")
    half = c.a2 / (2.0 * c.a1)
    return 2.0 * c.a3 / math.sqrt(c.a1 * c.a4) + half * half


def corrected_criterion(c: GeneralCubic) -> float:
    if c.a1 == 0.0:
        raise ZeroCoefficient("a1 must be nonzero")
    return (4.0 * c.a0 * c.a3 + c.a2 * c.a2) / (4.0 * c.a1 * c.a1)


def hessian_origin(c: GeneralCubic) -> float:
    """det Hess at O of the defining polynomial; total, no preconditions."""
    return -4.0 * c.a0 * c.a3 - c.a2 * c.a2


def origin_sign_flips(c: GeneralCubic, radius: float, n: int = 2048) -> int:
    return circle_sign_flips(c, 0.0, 0.0, radius, n)


def classify_origin(c: GeneralCubic) -> OriginReport:
    """Shape of the origin singularity, with both criteria reported.

    The corrected value decides when its sign is resolved; inside the
    tolerance band the verdict falls back to sign counting on punctured
    circles exactly as for the fold-frame curve.
    """
    paper = paper_criterion(c)
    corrected = corrected_criterion(c)
    hess = hessian_origin(c)

    band = _EPS * (1.0 + abs(corrected))
    if corrected > band:
        shape = ShapeClass.NODE
    elif corrected < -band:
        shape = ShapeClass.ISOLATED_POINT
    else:
        flips = {origin_sign_flips(c, rho) for rho in _SAMPLING_RADII}
        shape = ShapeClass.CUSP if flips == {2} else ShapeClass.DEGENERATE

    paper_band = _EPS * (1.0 + abs(paper))
    discrepancy = (abs(paper) > paper_band and abs(corrected) > band and
                   (paper > 0.0) != (corrected > 0.0)) or \
                  (abs(paper) <= paper_band) != (abs(corrected) <= band)
    # sanity: the Hessian must tell the same story as the corrected value
    if (corrected > band and hess >= 0.0) or (corrected < -band and hess <= 0.0):
        raise SignObstruction(
            "hessian_origin sign contradicts corrected_value; "
            f"coefficients {c!r}"
        )
    return OriginReport(
        paper_value=paper,
        corrected_value=corrected,
        hessian_det=hess,
        shape=shape,
        discrepancy=discrepancy,
    )


def ophiuride(a: float, b: float) -> GeneralCubic:
    """x*(x**2 + y**2) + (a*x - b*y)*y = 0."""
    return GeneralCubic(a0=-b, a1=-1.0, a2=-a, a3=0.0, a4=-1.0)


def cissoid(a: float) -> GeneralCubic:
    """Cissoid of Diocles x*(x**2 + y**2) - 2*a*y**2 = 0; needs a != 0."""
    if a == 0.0:
        raise DegenerateInput("cissoid scale must be nonzero")
    return GeneralCubic(a0=2.0 * a, a1=-1.0, a2=0.0, a3=0.0, a4=-1.0)
