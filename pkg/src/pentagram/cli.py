"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 geometric degeneracy,
3 solver non-convergence.
"""
import argparse
import csv
import io
import json
import sys

import numpy as np

from . import config
from .conics import center_distance, is_concentric
from .errors import GeometryError, SolverError, TooFewVertices
from .experiment import EXPERIMENT_HEADER, run_experiment
from .glick import TOL_DP, d_vector, glick_is_affine, relative_d_norm
from .maps import convexity_horizon, orbit
from .polygon import atomic_write, is_convex, random_convex_polygon, read_polygon_json, write_polygon_json
from .svg import orbit_svg
from .variety import project_to_variety

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_SOLVER = 0, 1, 2, 3

ORBIT_HEADER = ("k", "convex", "d_norm", "diameter")


class InputError(Exception):
    pass


def _load(args):
    if args.random is not None:
        if args.random < 5:
            raise InputError(f"n must be at least 5, got {args.random}")
        return random_convex_polygon(args.random, args.seed)
    if not args.polygon:
        raise InputError("give a polygon file or --random <n>")
    try:
        return read_polygon_json(args.polygon)
    except TooFewVertices as exc:
        raise InputError(str(exc)) from exc
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {args.polygon}: {exc}") from exc


def _require_convex(pts):
    if not is_convex(pts):
        raise GeometryError("polygon is not strictly convex")


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(r[h]) for h in header])
    return buf.getvalue()


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return v


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6e}"
    return str(v)


def cmd_check(args):
    pts = _load(args)
    _require_convex(pts)
    tol = args.tol if args.tol is not None else TOL_DP
    report = {
        "n": len(pts),
        "d_norm": float(np.linalg.norm(d_vector(pts))),
        "d_relative": relative_d_norm(pts),
        "glick_affine": glick_is_affine(pts, tol),
    }
    try:
        report["horizon"] = convexity_horizon(pts, args.kmax, reproject=None if args.reproject else False)
    except GeometryError:
        report["horizon"] = "degenerate"
    if len(pts) == 5:
        dist, scale = center_distance(pts)
        report["concentric"] = is_concentric(pts)
        report["center_distance"] = dist
        report["center_distance_relative"] = dist / scale
    for key, value in report.items():
        print(f"{key}: {_fmt(value)}")
    if args.out:
        atomic_write(args.out, json.dumps(report, indent=1) + "\n")
    return EXIT_OK


def cmd_orbit(args):
    pts = _load(args)
    _require_convex(pts)
    rep = orbit(
        pts,
        args.map,
        args.kmax,
        renormalize=args.renormalize,
        reproject=None if args.reproject else False,
    )
    rows = [dict(k=s.k, convex=s.convex, d_norm=s.d_norm, diameter=s.diameter) for s in rep.steps]
    text = _csv_text(ORBIT_HEADER, rows)
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    if args.svg:
        atomic_write(args.svg, orbit_svg(rep.frames))
    print(f"terminated: {rep.terminated_reason.value} after {rep.last.k} steps", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args):
    pts = _load(args)
    _require_convex(pts)
    rep = project_to_variety(pts, args.vertex, tol=args.tol if args.tol is not None else 1e-12)
    print(f"iterations: {rep.iterations}")
    print(f"final_residual: {rep.final_residual:.6e}")
    print(f"moved_vertex: {rep.moved_vertex}")
    print(f"displacement: {rep.displacement:.6e}")
    if args.out:
        write_polygon_json(args.out, rep.result)
    else:
        print(json.dumps({"vertices": rep.result.tolist()}))
    return EXIT_OK


def cmd_experiment(args):
    rows = run_experiment(
        args.n,
        args.trials,
        args.kmax,
        args.seed,
        reproject=args.reproject,
        variety_trials=args.variety_trials,
    )
    text = _csv_text(EXPERIMENT_HEADER, rows)
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="pentagram", description="Inverse pentagram map convexity tools.")
    parser.add_argument("--proj-tol", type=float, default=None, help="global projective tolerance (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    def polygon_args(p):
        p.add_argument("polygon", nargs="?", help='JSON file {"vertices": [[x, y], ...]}')
        p.add_argument("--random", type=int, metavar="N", help="use a random convex N-gon instead of a file")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("check", help="test the equivalent conditions for eternal convexity")
    polygon_args(p)
    p.add_argument("--tol", type=float, help="relative |d_P| tolerance for the affinity verdict")
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--no-reproject", dest="reproject", action="store_false")
    p.add_argument("--out", help="also write the report as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbit", help="iterate S or D; CSV of statistics and SVG strip")
    polygon_args(p)
    p.add_argument("--map", choices=["S", "D"], default="S")
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--no-renormalize", dest="renormalize", action="store_false")
    p.add_argument("--no-reproject", dest="reproject", action="store_false")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--svg", help="SVG output path")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("solve", help="project onto d_P = 0 by moving one vertex")
    polygon_args(p)
    p.add_argument("--tol", type=float, help="relative residual target (default 1e-12)")
    p.add_argument("--vertex", type=int, help="vertex to move (default: try best-conditioned first)")
    p.add_argument("--out", help="output polygon JSON (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("experiment", help="horizon statistics, random vs variety-projected")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--variety-trials", type=int, help="trials that also run the variety arms (default: all)")
    p.add_argument("--kmax", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-reproject", dest="reproject", action="store_false")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kmax", 1) < 1:
        parser.error("--kmax must be at least 1")
    if args.proj_tol is not None:
        config.set_tol(args.proj_tol)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SolverError as exc:
        print(f"solver failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except GeometryError as exc:
        print(f"degenerate input: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
