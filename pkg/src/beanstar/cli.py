"""Command-line front end: ``beanstar <command> [flags]``.

Exit codes are 0 on success, 1 when a verification fails and 2 for usage or
parameter errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import constants as K
from . import extremal, geometry, radii, subordination, verify
from .complex_core import bean_series
from .errors import BeanError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _num(v, precision: Optional[int]):
    if isinstance(v, float) and precision is not None and math.isfinite(v):
        return float(f"{v:.{precision}g}")
    return v


def _emit_table(rows: List[dict], fmt: str, precision: Optional[int], out) -> None:
    rows = [{k: _num(v, precision) for k, v in row.items()} for row in rows]
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(buf.getvalue())


def _emit_record(record: dict, out) -> None:
    out.write(json.dumps(record, indent=2) + "\n")


# constants and bounds

def constant_rows() -> List[dict]:
    b = geometry.sharp_bounds()
    inc = geometry.inclusion_thresholds()
    disk = geometry.minimax_enclosing_disk()
    rows = [
        ("R0", K.R0, "r0_threshold"),
        ("left_end", K.LEFT_END, "bean_left_end"),
        ("alpha0", K.ALPHA0, "inscribed_switch"),
        ("r_alpha0", K.R_ALPHA0, "inscribed_radius"),
        ("r_convex", geometry.convexity_radius(), "convexity_equation"),
        ("re_max", b.re_max, "sharp_bounds_re"),
        ("theta0", b.theta0, "sharp_bounds_re"),
        ("im_abs_max", b.im_abs_max, "sharp_bounds_im"),
        ("theta1", b.theta1, "sharp_bounds_im"),
        ("mod_sq_max", b.mod_max**2, "sharp_bounds_mod"),
        ("theta2", b.theta2, "sharp_bounds_mod"),
        ("arg_max", b.arg_abs_max, "sharp_bounds_arg"),
        ("beta_strongly_starlike", b.beta, "sharp_bounds_arg"),
        ("rho_parabolic", inc.parabolic_rho, "parabolic_inclusion"),
        ("theta_parabolic", inc.parabolic_theta, "parabolic_inclusion"),
        ("k_starlike", inc.kst_k, "kst_inclusion"),
        ("c_cassinian", inc.cassinian_c, "cassinian_inclusion"),
        ("minimax_center", float(disk.center.real), "minimax_enclosing_disk"),
        ("minimax_radius", disk.radius, "minimax_enclosing_disk"),
        ("enclosing_radius_center_1", geometry.enclosing_radius(1.0), "enclosing_radius"),
        ("r0_distortion", geometry.distortion_threshold(), "distortion_threshold"),
        ("covering_radius", extremal.covering_radius(), "covering_radius"),
    ]
    return [{"name": n, "value": float(v), "equation_id": e} for n, v, e in rows]


def cmd_constants(args, out) -> int:
    _emit_table(constant_rows(), args.format, args.precision, out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    b = geometry.sharp_bounds()
    rows = [{"name": k, "value": float(v)} for k, v in vars(b).items()]
    rows.append({"name": "beta", "value": b.beta})
    _emit_table(rows, args.format, args.precision, out)
    return EXIT_OK


# curve export

def render_svg(points) -> str:
    xs = [round(p[1], 6) + 0.0 for p in points]
    ys = [round(-p[2], 6) + 0.0 for p in points]  # SVG y axis points down
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    mx, my = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
    vb = f"{x0 - mx:.6f} {y0 - my:.6f} {x1 - x0 + 2 * mx:.6f} {y1 - y0 + 2 * my:.6f}"
    coords = " ".join(f"{x:.6f},{y:.6f}" for x, y in zip(xs, ys))
    stroke = f"{(x1 - x0) / 400:.6f}"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}">\n'
        f'  <polyline fill="none" stroke="black" stroke-width="{stroke}" points="{coords}"/>\n'
        "</svg>\n"
    )


def cmd_curve(args, out) -> int:
    if not 0 < args.r <= 1:
        raise argparse.ArgumentTypeError(f"r must lie in (0, 1], got {args.r}")
    if args.samples < 1:
        raise argparse.ArgumentTypeError("need at least one sample")
    if args.samples < 16 and args.format == "svg":
        raise argparse.ArgumentTypeError("svg output needs at least 16 samples")
    rows = geometry.curve_rows(args.r, args.samples)
    if args.format == "svg":
        out.write(render_svg(rows))
    elif args.format == "json":
        out.write(json.dumps([list(r) for r in rows]) + "\n")
    else:
        out.write("theta,re,im\n")
        for t, x, y in rows:
            out.write(f"{t!r},{x!r},{y!r}\n")
    return EXIT_OK


# radii

def radius_results(args) -> list:
    cid = args.class_id

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise argparse.ArgumentTypeError(f"radius {cid} needs --{name}")
        return v

    if cid == "janowski":
        return [radii.radius_janowski(need("A"), need("B"))]
    if cid == "starlike_alpha":
        return [radii.radius_starlike_alpha(need("alpha"))]
    if cid in ("exp", "sg", "lune", "cardioid"):
        return [getattr(radii, f"radius_{cid}")()]
    if cid in ("L_alpha", "e_alpha", "BS", "cs", "starlike_within"):
        fn = radii.radius_starlike_alpha_within if cid == "starlike_within" else getattr(radii, f"radius_{cid}")
        return [fn(need("alpha"))]
    if cid == "limacon":
        return [radii.radius_limacon(need("s"))]
    variants = [args.variant] if args.variant else ["tan", "tanh"]
    return [radii.radius_convexity_alpha(need("alpha"), v) for v in variants]


def cmd_radius(args, out) -> int:
    records = [res.as_record(args.class_id) for res in radius_results(args)]
    _emit_record(records[0] if len(records) == 1 else records, out)
    return EXIT_OK


# beta bounds

def cmd_beta_bound(args, out) -> int:
    if args.family == "sqrt":
        bound = subordination.beta_bound_sqrt(args.alpha, args.k)
        q = subordination.BetaQuery(args.alpha, 0.5, args.k, 1, 1.0, 0.0)
        family = "mixed"
    else:
        q = subordination.BetaQuery(args.alpha, args.gamma, args.k, args.delta, args.A, args.B)
        bound = subordination.bound_for(args.family, q)
        family = args.family
    record = {"family": args.family, "parameters": vars(q), "bound": bound}
    code = EXIT_OK
    if args.verify:
        ok = subordination.verify_sufficiency(bound * (1 + 1e-6), q, family)
        record["verified"] = ok
        code = EXIT_OK if ok else EXIT_FAIL
    _emit_record(record, out)
    return code


def cmd_check_janowski(args, out) -> int:
    disk = geometry.janowski_disk(args.A, args.B)
    record = {
        "A": args.A,
        "B": args.B,
        "subordinate": geometry.janowski_subordination_test(args.A, args.B),
        "containment_oracle": geometry.contains_curve(disk.circle()),
        "center": float(disk.center.real),
        "radius": disk.radius,
    }
    _emit_record(record, out)
    return EXIT_OK


def _coeff(c):
    return str(c) if isinstance(c, Fraction) else float(c)


def cmd_series(args, out) -> int:
    exact = {"auto": None, "exact": True, "float": False}[args.mode]
    s = bean_series(args.n, exact) if args.function == "bean" else extremal.f0_series(args.n, exact)
    record = {"function": args.function, "exact": s.exact, "coefficients": [_coeff(c) for c in s.coeffs]}
    _emit_record(record, out)
    return EXIT_OK


def cmd_growth(args, out) -> int:
    rec = extremal.growth_distortion(args.r)
    record = dict(vars(rec))
    record["rotation"] = extremal.rotation_bound(args.r) if args.r <= extremal.SERIES_MAX_RADIUS else None
    _emit_record(record, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = verify.run_checks(perturb_r0=args.perturb_r0)
    items = verify.reported_items()
    if args.format == "json":
        _emit_record(
            {
                "checks": [vars(c) for c in checks],
                "reported": [vars(c) for c in items],
            },
            out,
        )
    else:
        for c in checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}\n")
        for c in items:
            out.write(f"INFO  {c.name}: {c.detail}\n")
        n_ok = sum(c.passed for c in checks)
        out.write(f"{n_ok}/{len(checks)} checks passed\n")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="beanstar", description="Bean-function constants, radii and subordination bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    def table(name, helptext, fn):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--precision", type=int, default=6, help="significant digits (0 for full precision)")
        sp.set_defaults(func=fn)
        return sp

    table("constants", "named constants with equation ids", cmd_constants)
    table("bounds", "sharp bounds of B on the unit circle", cmd_bounds)

    sp = sub.add_parser("curve", help="boundary of B(|z| < r)")
    sp.add_argument("--r", type=float, default=1.0)
    sp.add_argument("--samples", type=int, default=512)
    sp.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("radius", help="sharp B-radius of a class")
    sp.add_argument("class_id", choices=radii.CLASS_IDS)
    for flag in ("A", "B", "alpha", "s"):
        sp.add_argument(f"--{flag}", type=float)
    sp.add_argument("--variant", choices=("tan", "tanh"))
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("beta-bound", help="beta bound of a subordination implication")
    sp.add_argument("family", choices=("mixed", "sqrt", "power"))
    sp.add_argument("--alpha", type=float, default=0.0)
    sp.add_argument("--gamma", type=float, default=1.0)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--delta", type=int, default=1)
    sp.add_argument("--A", type=float, default=1.0)
    sp.add_argument("--B", type=float, default=0.0)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_beta_bound)

    sp = sub.add_parser("check-janowski", help="is (1 + Az)/(1 + Bz) subordinate to B?")
    sp.add_argument("--A", type=float, required=True)
    sp.add_argument("--B", type=float, required=True)
    sp.set_defaults(func=cmd_check_janowski)

    sp = sub.add_parser("series", help="Taylor coefficients of B or f0")
    sp.add_argument("function", choices=("bean", "f0"), nargs="?", default="bean")
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--mode", choices=("auto", "exact", "float"), default="auto")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("growth", help="growth, distortion and rotation bounds at |z| = r")
    sp.add_argument("--r", type=float, required=True)
    sp.set_defaults(func=cmd_growth)

    sp = sub.add_parser("verify", help="run the oracle suite")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--perturb-r0", type=float, default=0.0, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "precision", None) == 0:
        args.precision = None
    try:
        return args.func(args, out)
    except (BeanError, ValueError, argparse.ArgumentTypeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"beanstar {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
