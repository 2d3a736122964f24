"""Deterministic output: SVG scenes, orbit CSV, and JSON serialization.

Rendering is byte-deterministic for a given scene: fixed sampling
counts, fixed palette, floats printed through one formatter.  Pages are
drawn in mathematical coordinates inside a y-flipped group, with text
placed in pixel space so labels stay upright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curve import BelochParams, ShapeClass, classify, orbit
from .errors import BadRange, EmptyScene
from .geom import Circle, Point
from .parabola import fg_intersection_count

_PALETTE = {
    "orbit": "#1f77b4",
    "parabola": "#2ca02c",
    "fold": "#999999",
    "circle": "#d62728",
    "marker": "#111111",
    "witness": "#d62728",
}


def fmt(v: float) -> str:
    """17 significant digits, the round-trip serialization format."""
    return format(float(v), ".17g")


def _fmt6(v: float) -> str:
    return format(float(v), ".6f")


def to_json(obj) -> str:
    """Tiny JSON emitter: dict/list/str/bool/None/int/float only.

    Floats go through fmt() so files are stable to the last digit; key
    order is insertion order.
    """
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        out = ['"']
        for ch in obj:
            if ch in '"\\':
                out.append("\\" + ch)
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        out.append('"')
        return "".join(out)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float {obj!r} in report")
        return fmt(obj)
    if isinstance(obj, dict):
        parts = [f"{to_json(str(k))}: {to_json(v)}" for k, v in obj.items()]
        return "{" + ", ".join(parts) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass(frozen=True)
class Viewport:
    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self):
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise BadRange("viewport must have positive extent")


@dataclass(frozen=True)
class OrbitTrace:
    params: BelochParams


@dataclass(frozen=True)
class ParabolaTrace:
    alpha: float = 2.0


@dataclass(frozen=True)
class FoldLines:
    rs: tuple[float, ...]
    alpha: float = 2.0


@dataclass(frozen=True)
class CircleItem:
    circle: Circle


@dataclass(frozen=True)
class MarkerSet:
    markers: tuple[tuple[str, Point], ...]
    color: str = _PALETTE["marker"]


@dataclass(frozen=True)
class PlotScene:
    items: tuple
    viewport: Viewport
    samples_per_curve: int = 512


DEFAULT_VIEWPORT = Viewport(-6.0, -6.0, 6.0, 6.0)


def build_scene(
    params: BelochParams, viewport: Viewport | None = None
) -> PlotScene:
    """Standard scene: parabola, orbit trace, P, A, and contact markers.

    Without an explicit viewport the default window grows just enough
    to contain P, A and every curve/parabola contact point.
    """
    markers: list[tuple[str, Point]] = [
        ("P", params.point_p),
        ("A", params.point_a),
    ]
    witness_pts: list[tuple[str, Point]] = []
    if params.alpha == 2.0:
        inter = fg_intersection_count(params)
        for i, r in enumerate(inter.witnesses):
            witness_pts.append((f"W{i + 1}", orbit(params, r).point))
        if classify(params) is ShapeClass.ISOLATED_POINT:
            markers.append(("isolated", params.point_p))
    if viewport is None:
        vp = DEFAULT_VIEWPORT
        xs = [vp.x0, vp.x1] + [pt.x for _, pt in markers + witness_pts]
        ys = [vp.y0, vp.y1] + [pt.y for _, pt in markers + witness_pts]
        margin = 0.5
        viewport = Viewport(
            min(xs) - margin if min(xs) < vp.x0 else vp.x0,
            min(ys) - margin if min(ys) < vp.y0 else vp.y0,
            max(xs) + margin if max(xs) > vp.x1 else vp.x1,
            max(ys) + margin if max(ys) > vp.y1 else vp.y1,
        )
    items: list = [ParabolaTrace(alpha=params.alpha), OrbitTrace(params)]
    items.append(MarkerSet(tuple(markers)))
    if witness_pts:
        items.append(MarkerSet(tuple(witness_pts), color=_PALETTE["witness"]))
    return PlotScene(items=tuple(items), viewport=viewport)


def _orbit_polyline(trace: OrbitTrace, vp: Viewport, n: int) -> list[Point]:
    params = trace.params
    # expand the parameter range until the trace leaves the window
    # vertically on both sides; t grows like alpha*r so this terminates
    span = max(abs(vp.y0), abs(vp.y1), 1.0)
    r = 1.0
    while r < 1e6:
        if orbit(params, r).t > 2.0 * span and orbit(params, -r).t < -2.0 * span:
            break
        r *= 2.0
    return [
        orbit(params, -r + 2.0 * r * k / (n - 1)).point for k in range(n)
    ]


def _parabola_polyline(alpha: float, vp: Viewport, n: int) -> list[Point]:
    pts = []
    for k in range(n):
        y = vp.y0 + (vp.y1 - vp.y0) * k / (n - 1)
        pts.append(Point(-y * y / (2.0 * alpha), y))
    return pts


def _fold_polyline(r: float, alpha: float, vp: Viewport) -> list[Point]:
    # x = (alpha/2) r^2 - r y, clipped by the two horizontal edges
    return [
        Point(0.5 * alpha * r * r - r * vp.y0, vp.y0),
        Point(0.5 * alpha * r * r - r * vp.y1, vp.y1),
    ]


def _path(points: list[Point]) -> str:
    return " ".join(
        f"{'M' if i == 0 else 'L'} {_fmt6(pt.x)} {_fmt6(pt.y)}"
        for i, pt in enumerate(points)
    )


def render_svg(scene: PlotScene) -> str:
    """Self-contained SVG 1.1 document for the scene."""
    if not scene.items:
        raise EmptyScene("nothing to draw")
    vp = scene.viewport
    width = 640.0
    k = width / (vp.x1 - vp.x0)
    height = k * (vp.y1 - vp.y0)
    n = scene.samples_per_curve

    def px(pt: Point) -> tuple[float, float]:
        return ((pt.x - vp.x0) * k, (vp.y1 - pt.y) * k)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt6(width)}" height="{_fmt6(height)}" '
        f'viewBox="0 0 {_fmt6(width)} {_fmt6(height)}">',
        f'<rect x="0" y="0" width="{_fmt6(width)}" height="{_fmt6(height)}" '
        f'fill="#ffffff"/>',
        '<defs><clipPath id="frame">'
        f'<rect x="0" y="0" width="{_fmt6(width)}" height="{_fmt6(height)}"/>'
        "</clipPath></defs>",
        f'<g clip-path="url(#frame)" transform="translate({_fmt6(-vp.x0 * k)} '
        f'{_fmt6(vp.y1 * k)}) scale({_fmt6(k)} {_fmt6(-k)})" '
        f'fill="none" stroke-linejoin="round">',
    ]
    w_main = 1.6 / k
    w_thin = 1.0 / k
    labels: list[tuple[str, Point, str]] = []
    for item in scene.items:
        if isinstance(item, OrbitTrace):
            pts = _orbit_polyline(item, vp, 4 * n)
            lines.append(
                f'<path d="{_path(pts)}" stroke="{_PALETTE["orbit"]}" '
                f'stroke-width="{_fmt6(w_main)}"/>'
            )
        elif isinstance(item, ParabolaTrace):
            pts = _parabola_polyline(item.alpha, vp, n)
            lines.append(
                f'<path d="{_path(pts)}" stroke="{_PALETTE["parabola"]}" '
                f'stroke-width="{_fmt6(w_main)}" stroke-dasharray='
                f'"{_fmt6(8.0 / k)} {_fmt6(5.0 / k)}"/>'
            )
        elif isinstance(item, FoldLines):
            for r in item.rs:
                pts = _fold_polyline(r, item.alpha, vp)
                lines.append(
                    f'<path d="{_path(pts)}" stroke="{_PALETTE["fold"]}" '
                    f'stroke-width="{_fmt6(w_thin)}"/>'
                )
        elif isinstance(item, CircleItem):
            c = item.circle
            lines.append(
                f'<circle cx="{_fmt6(c.center.x)}" cy="{_fmt6(c.center.y)}" '
                f'r="{_fmt6(c.radius)}" stroke="{_PALETTE["circle"]}" '
                f'stroke-width="{_fmt6(w_thin)}"/>'
            )
        elif isinstance(item, MarkerSet):
            for label, pt in item.markers:
                lines.append(
                    f'<circle cx="{_fmt6(pt.x)}" cy="{_fmt6(pt.y)}" '
                    f'r="{_fmt6(4.0 / k)}" fill="{item.color}" stroke="none"/>'
                )
                labels.append((label, pt, item.color))
        else:
            raise TypeError(f"unknown scene item {type(item).__name__}")
    lines.append("</g>")
    for label, pt, color in labels:
        x, y = px(pt)
        lines.append(
            f'<text x="{_fmt6(x + 7.0)}" y="{_fmt6(y - 7.0)}" '
            f'font-family="sans-serif" font-size="13" '
            f'fill="{color}">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_orbit_csv(
    params: BelochParams, r_min: float, r_max: float, n: int
) -> str:
    """CSV of orbit samples: header r,s,t then n uniformly spaced rows."""
    if not (r_min < r_max):
        raise BadRange(f"empty parameter range [{r_min!r}, {r_max!r}]")
    if n < 2:
        raise BadRange("need at least two samples")
    rows = ["r,s,t"]
    for k in range(n):
        r = r_min + (r_max - r_min) * k / (n - 1)
        o = orbit(params, r)
        rows.append(f"{fmt(r)},{fmt(o.s)},{fmt(o.t)}")
    return "\n".join(rows) + "\n"
