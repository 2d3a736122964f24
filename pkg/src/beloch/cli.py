"""Command line interface.

Exit codes: 0 on success, 2 on usage errors (argparse's own convention),
1 when a computation raises a library error, including any internal
oracle disagreement.  All machine output is JSON with a "schema": 1
field and 17-significant-digit floats; human output rounds to 6.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as verify_mod
from .curve import (
    BelochParams,
    ShapeClass,
    classify,
    hessian_at_singular,
    special_parameters,
    vanishes_at_a,
)
from .errors import BelochError
from .fold import CubicEq, solve_by_folding
from .general import GeneralCubic, classify_origin, normalize
from .parabola import fg_intersection_count
from .render import (
    Viewport,
    build_scene,
    export_orbit_csv,
    fmt,
    render_svg,
    to_json,
)
from .surface import structure_verdict
from .winding import axis_ray_crossings, build_loop, winding_number

_G6 = ".6g"


def _fmt6(v: float) -> str:
    return format(v, _G6)


def _line_dict(line) -> dict:
    return {"a": line.a, "b": line.b, "c": line.c}


def _point_list(pt) -> list:
    return [pt.x, pt.y]


def _parse_floats(parser: argparse.ArgumentParser, text: str, n: int, what: str):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != n:
        parser.error(f"{what} needs {n} comma-separated numbers, got {text!r}")
    try:
        return [float(s) for s in parts]
    except ValueError:
        parser.error(f"{what} contains a non-number: {text!r}")


def _cmd_solve(args, parser) -> int:
    eq = CubicEq(args.a, args.b, args.c)
    solutions = solve_by_folding(eq)
    if args.json:
        payload = {
            "schema": 1,
            "command": "solve",
            "a": args.a,
            "b": args.b,
            "c": args.c,
            "roots": [
                {
                    "r": s.r,
                    "fold": _line_dict(s.fold),
                    "a_image": _point_list(s.a_image),
                    "p_image": _point_list(s.p_image),
                    "residual_i": s.residual_i,
                    "residual_ii": s.residual_ii,
                    "cubic_residual": abs(eq(s.r)),
                }
                for s in solutions
            ],
        }
        print(to_json(payload))
        return 0
    print(
        f"x^3 - ({_fmt6(args.a)}) x^2 - ({_fmt6(args.b)}) x "
        f"+ ({_fmt6(args.c)}) = 0"
    )
    if not solutions:
        print("no real roots")
    for s in solutions:
        print(
            f"  r = {_fmt6(s.r)}   fold: x + ({_fmt6(s.fold.b / s.fold.a)}) y "
            f"- ({_fmt6(-s.fold.c / s.fold.a)}) = 0   "
            f"residuals: I={_fmt6(s.residual_i)} II={_fmt6(s.residual_ii)} "
            f"cubic={_fmt6(abs(eq(s.r)))}"
        )
    return 0


def _winding_payload(params: BelochParams) -> dict:
    loop = build_loop(params)
    center = params.point_a
    res = winding_number(loop, center)
    east, north, west, south = axis_ray_crossings(loop, center)
    lo, hi = loop.samples[0].r, loop.samples[-1].r
    return {
        "center": _point_list(center),
        "loop_range": [lo, hi],
        "value": res.value,
        "min_distance": res.min_distance,
        "samples_used": res.samples_used,
        "ray_crossings": {
            "east": east,
            "north": north,
            "west": west,
            "south": south,
        },
        "center_on_curve": vanishes_at_a(params),
    }


def _errata_notes(params: BelochParams, shape: ShapeClass) -> list[str]:
    notes = []
    if shape is ShapeClass.NODE:
        notes.append(
            "self-intersection requires strictly positive discriminant; "
            "the vanishing case is the cusp boundary"
        )
    if special_parameters(params):
        notes.append(
            "contact parameters computed as (q +- sqrt(q^2 + 2 alpha p)) / alpha"
        )
    return notes


def _cmd_analyze(args, parser) -> int:
    params = BelochParams(p=args.p, q=args.q, alpha=args.alpha)
    shape = classify(params)
    specials = special_parameters(params)
    fg = fg_intersection_count(params) if params.alpha == 2.0 else None
    winding = None
    if shape is ShapeClass.NODE:
        winding = _winding_payload(params)
    notes = _errata_notes(params, shape)
    if args.json:
        payload = {
            "schema": 1,
            "command": "analyze",
            "p": params.p,
            "q": params.q,
            "alpha": params.alpha,
            "discriminant": params.discriminant,
            "hessian_det": hessian_at_singular(params),
            "shape": shape.value,
            "special_parameters": list(specials),
            "fg": None
            if fg is None
            else {"count": fg.count.value, "witnesses": list(fg.witnesses)},
            "winding": winding,
            "errata_notes": notes,
        }
        print(to_json(payload))
        return 0
    print(f"P = ({_fmt6(params.p)}, {_fmt6(params.q)})  alpha = {_fmt6(params.alpha)}")
    print(
        f"discriminant 2*alpha*p + q^2 = {_fmt6(params.discriminant)}   "
        f"hessian at P = {_fmt6(hessian_at_singular(params))}"
    )
    print(f"shape: {shape.value}")
    print(
        "special parameters: "
        + (", ".join(_fmt6(r) for r in specials) if specials else "(none)")
    )
    if fg is not None:
        wit = ", ".join(_fmt6(r) for r in fg.witnesses) if fg.witnesses else "(none)"
        print(f"curve/parabola contacts: {fg.count.value}  at r = {wit}")
    if winding is not None:
        val = "undefined" if winding["value"] is None else str(winding["value"])
        rc = winding["ray_crossings"]
        print(
            f"winding around A: {val}   ray crossings E/N/W/S: "
            f"{rc['east']}/{rc['north']}/{rc['west']}/{rc['south']}"
        )
    for note in notes:
        print(f"note: {note}")
    return 0


def _cmd_winding(args, parser) -> int:
    params = BelochParams(p=args.p, q=args.q)
    payload = _winding_payload(params)
    if args.json:
        print(to_json({"schema": 1, "command": "winding", "p": args.p, "q": args.q, **payload}))
        return 0
    lo, hi = payload["loop_range"]
    print(f"loop over r in [{_fmt6(lo)}, {_fmt6(hi)}]")
    val = payload["value"]
    if val is None:
        print(
            "winding around A: undefined "
            f"(loop passes within {_fmt6(payload['min_distance'])} of A)"
        )
    else:
        print(f"winding around A: {val}")
    rc = payload["ray_crossings"]
    print(
        f"ray crossings east={rc['east']} north={rc['north']} "
        f"west={rc['west']} south={rc['south']}"
    )
    return 0


def _cmd_surface(args, parser) -> int:
    params = BelochParams(p=args.p, q=args.q)
    report = structure_verdict(params)
    if args.json:
        payload = {
            "schema": 1,
            "command": "surface",
            "p": args.p,
            "q": args.q,
            "sign_class": report.sign_class,
            "critical_points": [
                {
                    "location": _point_list(cp.location),
                    "value": cp.value,
                    "kind": cp.kind.value,
                    "hessian_det": cp.hessian_det,
                    "fxx": cp.fxx,
                }
                for cp in report.points
            ],
            "extremum_count": report.extremum_count,
            "saddle_count": report.saddle_count,
            "degenerate_count": report.degenerate_count,
            "matches_structure": report.matches_structure,
            "observed_polarity": report.observed_polarity,
            "notes": list(report.notes),
        }
        print(to_json(payload))
        return 0
    print(f"sign class of 4p + q^2: {report.sign_class:+d}")
    for cp in report.points:
        print(
            f"  ({_fmt6(cp.location.x)}, {_fmt6(cp.location.y)})  "
            f"z = {_fmt6(cp.value)}  {cp.kind.value}  "
            f"det = {_fmt6(cp.hessian_det)}  fxx = {_fmt6(cp.fxx)}"
        )
    print(f"matches expected structure: {report.matches_structure}")
    for note in report.notes:
        print(f"note: {note}")
    return 0


def _cmd_classify_general(args, parser) -> int:
    a0, a1, a2, a3, a4 = _parse_floats(parser, args.coeffs, 5, "--coeffs")
    cubic = GeneralCubic(a0, a1, a2, a3, a4)
    report = classify_origin(cubic)
    norm = normalize(cubic)
    if args.json:
        payload = {
            "schema": 1,
            "command": "classify-general",
            "coeffs": [a0, a1, a2, a3, a4],
            "paper_value": report.paper_value,
            "corrected_value": report.corrected_value,
            "hessian_det": report.hessian_det,
            "shape": report.shape.value,
            "discrepancy": report.discrepancy,
            "normalization": {
                "beta": norm.beta,
                "alpha": norm.alpha,
                "p": norm.p,
                "q": norm.q,
            },
        }
        print(to_json(payload))
        return 0
    print(
        f"shortcut value = {_fmt6(report.paper_value)}   "
        f"corrected value = {_fmt6(report.corrected_value)}   "
        f"hessian at O = {_fmt6(report.hessian_det)}"
    )
    print(f"shape at O: {report.shape.value}")
    print(
        f"normalization: beta = {_fmt6(norm.beta)}  alpha = {_fmt6(norm.alpha)}  "
        f"p = {_fmt6(norm.p)}  q = {_fmt6(norm.q)}"
    )
    if report.discrepancy:
        print(
            "note: the shortcut value disagrees with the corrected value "
            "here; the corrected sign is the one backed by the Hessian "
            "and by sampling"
        )
    return 0


def _cmd_plot(args, parser) -> int:
    params = BelochParams(p=args.p, q=args.q)
    viewport = None
    if args.window is not None:
        x0, y0, x1, y1 = _parse_floats(parser, args.window, 4, "--window")
        viewport = Viewport(x0, y0, x1, y1)
    svg = render_svg(build_scene(params, viewport))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out} ({len(svg)} bytes)")
    return 0


def _cmd_orbit_csv(args, parser) -> int:
    params = BelochParams(p=args.p, q=args.q)
    r0, r1 = _parse_floats(parser, args.range, 2, "--range")
    text = export_orbit_csv(params, r0, r1, args.n)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(f"wrote {args.out} ({args.n} rows)")
    return 0


def _cmd_verify(args, parser) -> int:
    results = verify_mod.run_all(seed=args.seed, trials=args.trials)
    failed = False
    for res in results:
        if res.ok:
            print(f"ok    {res.name}  ({res.trials} trials)")
        else:
            failed = True
            print(f"FAIL  {res.name}  ({len(res.failures)} failures)")
            print(f"      first reproducer: {res.failures[0]}")
    if failed:
        print("verification failed", file=sys.stderr)
        return 1
    print(f"all {len(results)} suites passed")
    return 0


def _default_seed() -> int:
    try:
        return int(os.environ.get("BELOCH_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beloch",
        description="Real cubics by folding, and the curve the folds sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve x^3 - a x^2 - b x + c = 0 by folding")
    p_solve.add_argument("--a", type=float, required=True)
    p_solve.add_argument("--b", type=float, required=True)
    p_solve.add_argument("--c", type=float, required=True)
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_an = sub.add_parser("analyze", help="shape and contact report for the curve at (p, q)")
    p_an.add_argument("--p", type=float, required=True)
    p_an.add_argument("--q", type=float, required=True)
    p_an.add_argument("--alpha", type=float, default=2.0)
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=_cmd_analyze)

    p_w = sub.add_parser("winding", help="loop winding number and ray crossings around A")
    p_w.add_argument("--p", type=float, required=True)
    p_w.add_argument("--q", type=float, required=True)
    p_w.add_argument("--json", action="store_true")
    p_w.set_defaults(func=_cmd_winding)

    p_s = sub.add_parser("surface", help="critical points of the height surface z = F(x, y)")
    p_s.add_argument("--p", type=float, required=True)
    p_s.add_argument("--q", type=float, required=True)
    p_s.add_argument("--json", action="store_true")
    p_s.set_defaults(func=_cmd_surface)

    p_g = sub.add_parser("classify-general", help="origin shape of a0 y^2 = a1 x y^2 + a2 x y + a3 x^2 + a4 x^3")
    p_g.add_argument("--coeffs", required=True, metavar="a0,a1,a2,a3,a4")
    p_g.add_argument("--json", action="store_true")
    p_g.set_defaults(func=_cmd_classify_general)

    p_p = sub.add_parser("plot", help="SVG picture of curve, parabola and markers")
    p_p.add_argument("--p", type=float, required=True)
    p_p.add_argument("--q", type=float, required=True)
    p_p.add_argument("--out", required=True, metavar="FILE.svg")
    p_p.add_argument("--window", metavar="x0,y0,x1,y1")
    p_p.set_defaults(func=_cmd_plot)

    p_c = sub.add_parser("orbit-csv", help="CSV of orbit samples over an r range")
    p_c.add_argument("--p", type=float, required=True)
    p_c.add_argument("--q", type=float, required=True)
    p_c.add_argument("--range", required=True, metavar="r0,r1")
    p_c.add_argument("--n", type=int, required=True)
    p_c.add_argument("--out", required=True, metavar="FILE.csv")
    p_c.set_defaults(func=_cmd_orbit_csv)

    p_v = sub.add_parser("verify", help="run the randomized self-check suites")
    p_v.add_argument("--seed", type=int, default=_default_seed())
    p_v.add_argument("--trials", type=int, default=200)
    p_v.set_defaults(func=_cmd_verify)

    return parser


_PAIRED_FLAGS = ("--range", "--window", "--coeffs")


def _merge_paired(argv: list[str]) -> list[str]:
    """Join '--range -1,2' into '--range=-1,2' so argparse accepts it.

    Values of these flags routinely start with a minus sign, which
    argparse would otherwise read as a new option.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _PAIRED_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_merge_paired(list(argv)))
    try:
        return args.func(args, parser)
    except BelochError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
