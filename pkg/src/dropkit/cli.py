"""Command-line surface: every operation as a scriptable run emitting JSON/CSV.

Exit codes: 0 success, 1 property-check failure, 2 bad parameters,
3 unsupported regime.  Each invocation writes its results to stdout and
exactly one run manifest (JSON: command, parameters, seed, version, wall
time, sha256 of the output bytes) to stderr; identical inputs produce
identical output digests.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
import time

import numpy as np

from . import __version__
from .analytic import ball_constants, critical_mass
from .core import RieszParams, UnsupportedRegimeError, unit_ball_volume, unit_sphere_area
from .inequalities import binding_scan, lemma_g_verify
from .optimizer import optimize_shape
from .quadrature import moment_integral
from .shapes import FourierShape, GridShape, rasterize_ball
from .splits import best_split, necessary_condition, nonexistence_mass_bound

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_PARAMS = 2
EXIT_UNSUPPORTED = 3


def parse_mass_grid(spec: str) -> np.ndarray:
    """Parse lo:hi:step, inclusive at both ends within half a step."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"mass grid must be lo:hi:step, got {spec!r}")
    lo, hi, step = (float(x) for x in parts)
    if step <= 0 or hi < lo:
        raise ValueError(f"bad mass grid {spec!r}")
    return np.arange(lo, hi + 0.5 * step, step)


def emit_rows(rows: list[dict], fmt: str, out) -> None:
    """Scan output: CSV by default, JSON array on request."""
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
    else:
        cols = list(rows[0].keys())
        out.write(",".join(cols) + "\n")
        for row in rows:
            out.write(",".join(str(row[c]) for c in cols) + "\n")


def emit_object(obj: dict, fmt: str, out) -> None:
    """Single-object output: JSON by default, one CSV row on request."""
    if fmt == "csv":
        cols = list(obj.keys())
        out.write(",".join(cols) + "\n")
        out.write(",".join(str(obj[c]) for c in cols) + "\n")
    else:
        out.write(json.dumps(obj, indent=1) + "\n")


def cmd_mstar(args, out) -> int:
    params = RieszParams(args.dim, args.lam)
    method = "monte_carlo" if args.method == "mc" else "radial_quadrature"
    budget = int(args.budget) if args.budget else (400 if method == "radial_quadrature" else 10**7)
    constants = ball_constants(params, method=method, budget=budget, seed=args.seed)
    emit_object(
        {
            "N": args.dim,
            "lambda": args.lam,
            "m_star": critical_mass(params, constants),
            "d_ball": constants.riesz_self,
            "per_ball": constants.surface,
            "omega": constants.volume,
            "method": method,
            "stderr": constants.riesz_self_stderr,
        },
        args.format,
        out,
    )
    return EXIT_OK


def cmd_lemma_g(args, out) -> int:
    if args.alpha_grid < 10 or args.s_grid < 10:
        raise ValueError("grids must have >= 10 points")
    alphas = np.arange(1, args.alpha_grid + 1) / (args.alpha_grid + 1) * 2.0
    rows = []
    curves = []
    for alpha in alphas:
        rep = lemma_g_verify(float(alpha), args.s_grid)
        rows.append(
            {
                "alpha": float(alpha),
                "min_g": rep.min_g,
                "s1": rep.h_sign_change,
                "passed": rep.passed,
            }
        )
        if args.dump_curve:
            curves.extend(
                {"alpha": float(alpha), "s": float(s), "g": float(g)}
                for s, g in zip(rep.s_grid, rep.g_values)
            )
    emit_rows(rows, args.format, out)
    if args.dump_curve:
        with open(args.dump_curve, "w") as fh:
            emit_rows(curves, "csv", fh)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_CHECK_FAILED


def cmd_binding_scan(args, out) -> int:
    params = RieszParams(args.dim, args.lam)
    constants = ball_constants(params)
    rows = []
    for m in parse_mass_grid(args.mass_grid):
        rep = binding_scan(params, constants, float(m), args.s_grid)
        rows.append(
            {
                "m": float(m),
                "min_deficit": rep.min_deficit,
                "argmin_s": rep.argmin_s,
                "verdict": rep.verdict,
            }
        )
    emit_rows(rows, args.format, out)
    return EXIT_OK  # verdicts are data


def cmd_optimize(args, out) -> int:
    params = RieszParams(2, args.lam)
    if args.start == "disk":
        start = None
    else:
        with open(args.start) as fh:
            start = FourierShape.from_json(fh.read())
    opts = {"seed": args.seed}
    if args.h is not None:
        opts["h"] = args.h
    if args.max_iter is not None:
        opts["max_iter"] = args.max_iter
    if args.step_min is not None:
        opts["step_min"] = args.step_min
    result = optimize_shape(params, args.mass, args.modes, opts=opts, start=start)
    out.write(result.to_json() + "\n")
    if args.boundary_csv:
        theta = np.linspace(0.0, 2.0 * np.pi, 720, endpoint=False)
        r = result.shape.radius(theta)
        with open(args.boundary_csv, "w") as fh:
            emit_rows(
                [{"theta": float(t), "r": float(x)} for t, x in zip(theta, r)], "csv", fh
            )
    return EXIT_OK


def cmd_split(args, out) -> int:
    params = RieszParams(args.dim, args.lam)
    constants = ball_constants(params)
    rows = []
    for m in parse_mass_grid(args.mass_grid):
        rep = best_split(params, constants, float(m), args.kmax)
        for k, total in rep.energies_by_k:
            rows.append({"m": float(m), "k": k, "total": total, "best_k": rep.best_k})
    emit_rows(rows, args.format, out)
    return EXIT_OK


def cmd_necessary(args, out) -> int:
    params = RieszParams(args.dim, args.lam)
    with open(args.shape_file) as fh:
        g = GridShape.from_runlength(fh.read())
    rep = necessary_condition(g, params)
    emit_object(
        {
            "moment": rep.moment,
            "measure": rep.measure,
            "c_N": rep.c_N,
            "bound": rep.bound,
            "satisfied": rep.satisfied,
            "margin": rep.margin,
        },
        args.format,
        out,
    )
    return EXIT_OK


def cmd_nonexistence_bound(args, out) -> int:
    params = RieszParams(args.dim, args.lam)
    constants = ball_constants(params)
    if params.exponent < 1.0:
        # unit-ball moment by grid quadrature at a moderate resolution
        ball = rasterize_ball(args.dim, 1.0, args.h)
        ball_moment = moment_integral(ball, 1.0 - params.exponent)
    else:
        ball_moment = None
    bound = nonexistence_mass_bound(params, constants, ball_moment)
    emit_object(
        {"N": args.dim, "lambda": args.lam, "mass_bound": bound, "c_N": 2.0 / bound if args.lam == 1.0 else None},
        args.format,
        out,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dropkit")
    parser.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs are single-process deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dim=True):
        if dim:
            p.add_argument("--dim", type=int, required=True)
        p.add_argument("--lambda", dest="lam", type=float, required=True)
        p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("mstar", help="critical mass and ball constants")
    common(p)
    p.add_argument("--method", choices=("radial", "mc"), default="radial")
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_mstar, default_format="json")

    p = sub.add_parser("lemma-g", help="entropy comparison certificate sweep")
    p.add_argument("--alpha-grid", type=int, default=50)
    p.add_argument("--s-grid", type=int, default=10_000)
    p.add_argument("--dump-curve", default=None)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.set_defaults(fn=cmd_lemma_g, default_format="csv")

    p = sub.add_parser("binding-scan", help="binding deficit lower bound over a mass grid")
    common(p)
    p.add_argument("--mass-grid", required=True)
    p.add_argument("--s-grid", type=int, default=1000)
    p.set_defaults(fn=cmd_binding_scan, default_format="csv")

    p = sub.add_parser("optimize", help="volume-constrained shape optimization (N=2)")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--modes", type=int, default=2)
    p.add_argument("--h", type=float, default=None, help="cell size / base radius")
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--step-min", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start", default="disk", help="'disk' or a FourierShape JSON file")
    p.add_argument("--boundary-csv", default=None)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.set_defaults(fn=cmd_optimize, default_format="json")

    p = sub.add_parser("split", help="multi-ball split comparison over a mass grid")
    common(p)
    p.add_argument("--mass-grid", required=True)
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(fn=cmd_split, default_format="csv")

    p = sub.add_parser("necessary", help="slicing necessary condition on a grid shape")
    common(p)
    p.add_argument("--shape-file", required=True)
    p.set_defaults(fn=cmd_necessary, default_format="json")

    p = sub.add_parser("nonexistence-bound", help="mass bound from the slicing condition")
    common(p)
    p.add_argument("--h", type=float, default=0.02, help="ball rasterization cell size (lambda < 1)")
    p.set_defaults(fn=cmd_nonexistence_bound, default_format="json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format

    t0 = time.monotonic()
    buf = io.StringIO()
    try:
        code = args.fn(args, buf)
    except UnsupportedRegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS

    output = buf.getvalue()
    sys.stdout.write(output)
    manifest = {
        "command": args.command,
        "params": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("fn", "command", "default_format") and not callable(v)
        },
        "seed": getattr(args, "seed", None),
        "version": __version__,
        "wall_time_s": time.monotonic() - t0,
        "output_sha256": hashlib.sha256(output.encode()).hexdigest(),
    }
    print(json.dumps(manifest), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
