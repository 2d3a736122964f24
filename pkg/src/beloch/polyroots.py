"""Low-degree real polynomials with exact distinct-root counting.

Root *counting* runs on a canonical Sturm chain (terminated at the
numerical gcd), so multiple roots are counted once and the count stays
exact as long as coefficient noise is far below the chain's own scale.
Root *refinement* is count-guided bisection, which still converges for
even-multiplicity roots where plain sign bisection has nothing to bite
on.  Everything here is dense arithmetic on ascending coefficient lists;
degrees stay at most 6 by contract.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import CoefficientTrim, OracleDisagreement, ZeroPolynomial

_MAX_DEGREE = 6
_TRIM_REL = 1e-12
# remainder smaller than this (on unit-scaled dividends) ends the chain
_CHAIN_FLOOR = 1e-11
_WIDTH_TARGET = 1e-12
_MULT_REL = 1e-7


def _eval(coeffs, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _eval_scale(coeffs, x: float) -> float:
    """Magnitude bound on rounding noise of Horner at x (up to ~n ulps)."""
    acc = 0.0
    ax = abs(x)
    for c in reversed(coeffs):
        acc = acc * ax + abs(c)
    return acc


def _derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:] or [0.0]


def _maxabs(coeffs) -> float:
    return max(abs(c) for c in coeffs)


@dataclass(frozen=True)
class Poly:
    """Real polynomial, coefficients in ascending order, leading nonzero."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        cs = [float(c) for c in self.coeffs]
        if not cs or all(c == 0.0 for c in cs):
            raise ZeroPolynomial("all coefficients vanish")
        m = _maxabs(cs)
        trimmed = False
        while len(cs) > 1 and abs(cs[-1]) < _TRIM_REL * m:
            if cs[-1] != 0.0:
                trimmed = True  # exact structural zeros drop silently
            cs.pop()
        if trimmed:
            warnings.warn(
                "near-degenerate leading coefficient trimmed", CoefficientTrim
            )
        if all(c == 0.0 for c in cs):
            raise ZeroPolynomial("all coefficients vanish after trim")
        if len(cs) - 1 > _MAX_DEGREE:
            raise ValueError(f"degree {len(cs) - 1} > {_MAX_DEGREE} unsupported")
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def of(*coeffs: float) -> "Poly":
        return Poly(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        return _eval(self.coeffs, x)

    def derivative(self) -> "Poly":
        return Poly(tuple(_derivative(list(self.coeffs))))

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        out = [0.0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(tuple(out))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return Poly(tuple(a))

    def scaled(self, k: float) -> "Poly":
        return Poly(tuple(k * c for c in self.coeffs))


def cauchy_bound(p: Poly) -> float:
    cs = p.coeffs
    if len(cs) == 1:
        return 1.0
    lead = abs(cs[-1])
    return 1.0 + max(abs(c) for c in cs[:-1]) / lead


def _unit(coeffs):
    m = _maxabs(coeffs)
    return [c / m for c in coeffs]


def _neg_rem(num, den):
    """-(num mod den) for unit-ish scaled inputs, with leading cleanup."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    while len(num) - 1 >= dn:
        if num[-1] != 0.0:
            f = num[-1] / lead
            off = len(num) - 1 - dn
            for i in range(len(den)):
                num[off + i] -= f * den[i]
        num.pop()
    if not num:
        return []
    m = _maxabs(num)
    if m == 0.0:
        return []
    while num and abs(num[-1]) <= _TRIM_REL * m:
        num.pop()
    return [-c for c in num]


def sturm_chain(p: Poly) -> list[list[float]]:
    """Canonical chain [p, p', ...] stopping at the numerical gcd.

    Every element is rescaled to unit max-coefficient (positive factor,
    sign pattern preserved) to keep the recursion well-conditioned.
    """
    chain = [_unit(list(p.coeffs))]
    if p.degree == 0:
        return chain
    chain.append(_unit(_derivative(chain[0])))
    while len(chain[-1]) > 1:
        rem = _neg_rem(chain[-2], chain[-1])
        if not rem or _maxabs(rem) <= _CHAIN_FLOOR:
            break
        chain.append(_unit(rem))
    return chain


def _variations_raw(chain, x: float) -> int:
    prev = 0
    count = 0
    for cs in chain:
        v = _eval(cs, x)
        noise = _TRIM_REL * (_eval_scale(cs, x) + 1e-300)
        if abs(v) <= noise:
            continue
        s = 1 if v > 0.0 else -1
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _probe(chain, x: float) -> float:
    """Shift x off any numerical root of the chain head.

    Counting at a probe where p itself is in the noise band is the one
    genuinely unsafe spot for the drop-zeros rule, so move away first.
    """
    head = chain[0]
    step = max(1e-13, 1e-13 * abs(x))
    k = 0
    while abs(_eval(head, x)) <= _TRIM_REL * (_eval_scale(head, x) + 1e-300):
        k += 1
        if k > 60:
            break
        x += step
        step *= 2.0
    return x


def _variations(chain, x: float) -> int:
    return _variations_raw(chain, _probe(chain, x))


def count_distinct_real_roots(p: Poly, interval=None) -> int:
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    lo, hi = (-b, b) if interval is None else interval
    lo = max(lo, -b) - _WIDTH_TARGET
    hi = min(hi, b) + _WIDTH_TARGET
    if lo >= hi:
        return 0
    return _variations(chain, lo) - _variations(chain, hi)


def _newton(coeffs, x: float, max_move: float, steps: int = 60) -> float:
    """Damped Newton with a movement budget; returns best |value| point."""
    dcoeffs = _derivative(list(coeffs))
    x0 = x
    best, fbest = x, abs(_eval(coeffs, x))
    for _ in range(steps):
        d = _eval(dcoeffs, x)
        if d == 0.0:
            break
        step = _eval(coeffs, x) / d
        x2 = x - step
        if abs(x2 - x0) > max_move:
            break
        f2 = abs(_eval(coeffs, x2))
        if f2 < fbest:
            best, fbest = x2, f2
        if f2 >= fbest and abs(step) < 1e-15 * (1.0 + abs(x)):
            break
        x = x2
    return best


def _derivatives(coeffs):
    out = [list(coeffs)]
    while len(out[-1]) > 1:
        out.append(_derivative(out[-1]))
    return out


def _near_zero(coeffs, x: float, rel: float, tol_x: float = 0.0) -> bool:
    """Whether coeffs has a root within tol_x of x, to evaluation noise.

    The pure relative test |f(x)| <= rel * eval_scale(x) collapses when
    every low-order coefficient is zero and |x| is tiny: value and scale
    then shrink proportionally and the ratio pins at 1 even though x is
    a root to machine precision.  The |f'(x)| * tol_x slack accepts any
    value explicable by a true root within the location tolerance.
    """
    slack = 0.0
    if tol_x > 0.0 and len(coeffs) > 1:
        slack = abs(_eval(_derivative(list(coeffs)), x)) * tol_x
    return abs(_eval(coeffs, x)) <= rel * (_eval_scale(coeffs, x) + 1e-300) + slack


def _settle(p: Poly, x: float, width: float) -> tuple[float, int]:
    """Relocate a bisection-converged root and decide its multiplicity.

    An m-fold root is flat to rounding noise over a zone of half-width
    ~noise**(1/m), so the bisection midpoint can sit well off-center and
    derivative magnitudes taken there lie about the multiplicity.  The
    (m-1)-th derivative has the same root *simple*, hence sharp: try the
    highest multiplicity first, chase that derivative's root by Newton,
    and accept only if p and every lower derivative vanish there.
    """
    derivs = _derivatives(list(p.coeffs))
    for m in range(p.degree, 1, -1):
        allowance = 10.0 * _TRIM_REL ** (1.0 / m) * (1.0 + abs(x)) + width
        xc = _newton(derivs[m - 1], x, allowance)
        if abs(xc - x) > allowance:
            continue
        if not _near_zero(derivs[m - 1], xc, 1e-11, allowance):
            continue
        if not _near_zero(derivs[0], xc, 1e-10, allowance):
            continue
        if all(_near_zero(derivs[j], xc, 1e-8, allowance) for j in range(1, m - 1)):
            return xc, m
    # bisection stalls where the chain head sinks into its own noise
    # band, up to ~noise * scale / |p'| from the root; budget the final
    # polish for that, not just the bracket width
    dval = abs(_eval(derivs[1], x)) if len(derivs) > 1 else 0.0
    band = _TRIM_REL * (_eval_scale(list(p.coeffs), x) + 1e-300) / (dval + 1e-300)
    band = min(band, 1e-6 * (1.0 + abs(x)))
    return _newton(derivs[0], x, 8.0 * width + 8.0 * band + 1e-12), 1


def real_roots(p: Poly, interval=None) -> list[tuple[float, int]]:
    """Distinct real roots with multiplicities, ascending.

    Each root x0 satisfies |p(x0)| <= 1e-10 * scale where scale is the
    magnitude of the Horner evaluation at x0; the count of returned roots
    is cross-checked against the Sturm count and a mismatch raises.
    """
    if p.degree == 0:
        return []
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    lo, hi = (-b, b) if interval is None else interval
    lo = max(lo, -b) - _WIDTH_TARGET
    hi = min(hi, b) + _WIDTH_TARGET
    if lo >= hi:
        return []
    vlo, vhi = _variations(chain, lo), _variations(chain, hi)
    expected = vlo - vhi
    if expected <= 0:
        return []

    raw: list[float] = []
    stack = [(lo, hi, vlo, vhi)]
    while stack:
        a, c, va, vc = stack.pop()
        n = va - vc
        if n <= 0:
            continue
        width = c - a
        if width <= _WIDTH_TARGET * max(1.0, abs(a), abs(c)):
            # count-guided bisection converged; n > 1 here would mean a
            # cluster tighter than the target width, report the midpoint
            raw.append(0.5 * (a + c))
            continue
        m = 0.5 * (a + c)
        vm = _variations(chain, m)
        vm = min(max(vm, vc), va)  # clamp against probe noise
        stack.append((a, m, va, vm))
        stack.append((m, c, vm, vc))

    raw.sort()
    if len(raw) != expected:
        raise OracleDisagreement(
            f"Sturm count {expected} != {len(raw)} refined roots "
            f"for coeffs {p.coeffs}"
        )
    out = [_settle(p, x, _WIDTH_TARGET * max(1.0, abs(x))) for x in raw]
    out.sort()
    return out
