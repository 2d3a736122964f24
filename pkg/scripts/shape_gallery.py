"""Render one SVG per shape class into an output directory.

The gallery walks a short list of representative (p, q) pairs spanning
isolated point, cusp and node, plus the q = 0 axis cases where the
height surface grows extra critical points, and writes a picture per
case.  Handy for eyeballing how the loop collapses as 4p + q^2 drops
through zero.

    python3 scripts/shape_gallery.py --out-dir gallery/
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from beloch.curve import BelochParams, classify
from beloch.render import build_scene, render_svg


@dataclass(frozen=True)
class GalleryCase:
    p: float
    q: float
    note: str


CASES = [
    GalleryCase(-2.0, 1.0, "isolated point, deep negative side"),
    GalleryCase(-1.0, 2.0, "cusp on the boundary 4p + q^2 = 0"),
    GalleryCase(-4.0, 4.0, "second boundary case, wider frame"),
    GalleryCase(0.0, 0.0, "cusp at the origin"),
    GalleryCase(1.0, 1.0, "small node"),
    GalleryCase(2.0, 1.0, "node with A inside the loop"),
    GalleryCase(0.5, 2.0, "node with A outside the loop"),
    GalleryCase(1.0, 2.0, "node passing through A"),
    GalleryCase(-2.0, 0.0, "isolated point with the extra axis pair"),
]


def slug(case: GalleryCase) -> str:
    def part(v: float) -> str:
        s = f"{v:g}".replace("-", "m").replace(".", "p")
        return s

    return f"{part(case.p)}_{part(case.q)}"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("gallery"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for case in CASES:
        params = BelochParams(case.p, case.q)
        shape = classify(params).value
        svg = render_svg(build_scene(params))
        path = args.out_dir / f"{shape}_{slug(case)}.svg"
        path.write_text(svg)
        print(f"{path}  p={case.p:g} q={case.q:g}  {shape}  ({case.note})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
