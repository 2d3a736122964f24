"""Exception and warning types shared across the package."""


class BelochError(Exception):
    """Base class for all library errors."""


class DegenerateInput(BelochError):
    """Geometric construction asked for with coincident or invalid data."""


class ZeroPolynomial(BelochError):
    """All coefficients vanish; root queries are meaningless."""


class NotAFoldLine(BelochError):
    """Line is not of the form x + r*y - r**2 = 0 within tolerance."""


class NotANode(BelochError):
    """Operation requires a curve with a genuine self-intersection."""


class RefinementLimit(BelochError):
    """Adaptive refinement hit its iteration cap without resolving."""


class OracleDisagreement(BelochError):
    """Two independent computations of the same fact disagree.

    This is never caught internally: it indicates a real defect and must
    surface to the caller (the CLI maps it to exit code 1).
    """


class SignObstruction(BelochError):
    """A square root of a non-positive product was requested."""


class ZeroCoefficient(BelochError):
    """A coefficient that must be nonzero for normalization is zero."""


class EmptyScene(BelochError):
    """A plot scene with no drawable items."""


class BadRange(BelochError):
    """Sampling range is empty, reversed, or has too few points."""


class CoefficientTrim(UserWarning):
    """A near-degenerate leading coefficient was trimmed."""


class TangentialCrossing(UserWarning):
    """A ray crossing was non-transversal within tolerance.

    The crossing is still counted by the local perturbation rule (opposite
    neighbouring signs count once, equal signs count zero).
    """


class NearBoundary(UserWarning):
    """A classification input sits within tolerance of a decision boundary."""
