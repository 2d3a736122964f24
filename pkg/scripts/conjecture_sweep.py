"""Sweep a (p, q) grid and grade the critical-point structure rows.

For each grid point the closed-form census is compared against the
grid-seeded Newton scan, then against the expected row for the sign of
D = 4p + q^2 (extremum plus saddle, lone degenerate point, or saddle
plus interior extremum).  Mismatched rows are printed with their notes;
the known offenders are the q = 0, p < -3/2 cases, which genuinely grow
an extra axis pair.

    python3 scripts/conjecture_sweep.py --span 3 --step 0.5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from beloch.curve import BelochParams
from beloch.surface import critical_points, newton_census, structure_verdict


@dataclass(frozen=True)
class SweepConfig:
    span: float
    step: float
    census_check: bool


def frange(span: float, step: float) -> list[float]:
    n = int(round(2.0 * span / step))
    return [-span + k * step for k in range(n + 1)]


def run(cfg: SweepConfig) -> int:
    grid = frange(cfg.span, cfg.step)
    total = 0
    mismatched = []
    census_gaps = []
    for p in grid:
        for q in grid:
            params = BelochParams(p, q)
            total += 1
            report = structure_verdict(params)
            if not report.matches_structure:
                mismatched.append((p, q, report))
            if cfg.census_check:
                analytic = critical_points(params)
                swept = newton_census(params)
                if len(analytic) != len(swept):
                    census_gaps.append((p, q, len(analytic), len(swept)))

    print(f"{total} grid points, {len(mismatched)} structure mismatches")
    for p, q, report in mismatched:
        kinds = ",".join(c.kind.value for c in report.points)
        print(f"  p={p:g} q={q:g}  sign={report.sign_class:+d}  kinds=[{kinds}]")
        for note in report.notes:
            print(f"    note: {note}")
    if cfg.census_check:
        print(f"{len(census_gaps)} closed-form vs Newton census gaps")
        for p, q, na, ns in census_gaps:
            print(f"  p={p:g} q={q:g}  closed-form={na} newton={ns}")
        return 1 if census_gaps else 0
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--span", type=float, default=3.0, help="half-width of the grid")
    ap.add_argument("--step", type=float, default=0.5)
    ap.add_argument(
        "--no-census-check",
        action="store_true",
        help="skip the slow Newton cross-check",
    )
    args = ap.parse_args()
    cfg = SweepConfig(
        span=args.span, step=args.step, census_check=not args.no_census_check
    )
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
