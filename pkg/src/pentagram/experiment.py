"""Convexity-horizon experiment: random convex polygons vs. variety projections."""
import statistics

import numpy as np

from .errors import DegenerateOrbit, GeometryError, SolverError
from .glick import d_vector
from .maps import SURVIVED, convexity_horizon
from .polygon import random_convex_polygon
from .variety import project_to_variety

EXPERIMENT_HEADER = ("trial", "arm", "seed", "d_norm", "horizon", "status")


def _horizon(pts, k_max, reproject):
    try:
        return convexity_horizon(pts, k_max, reproject=reproject), "ok"
    except DegenerateOrbit:
        return "", "degenerate"


def horizon_rank(h, k_max):
    """Survivors sort after every finite horizon."""
    return k_max + 1 if h == SURVIVED else int(h)


def run_experiment(n, trials, k_max=50, seed=0, reproject=True, variety_trials=None):
    """One row per (trial, arm), then one median row per arm.

    Trial ``i`` uses seed ``seed + i``. Arms: ``random`` (the sampled
    polygon), ``variety`` (its projection onto ``d_P = 0``, no drift
    control) and, with ``reproject``, ``variety_reprojected``. The variety
    arms run on the first ``variety_trials`` trials (default: all).
    """
    if n < 5 or trials < 1:
        raise ValueError("need n >= 5 and trials >= 1")
    variety_trials = trials if variety_trials is None else variety_trials
    rows = []
    for i in range(trials):
        s = seed + i
        pts = random_convex_polygon(n, s)
        h, status = _horizon(pts, k_max, False)
        rows.append(dict(trial=i, arm="random", seed=s, d_norm=float(np.linalg.norm(d_vector(pts))), horizon=h, status=status))
        if i >= variety_trials:
            continue
        arms = ["variety"] + (["variety_reprojected"] if reproject else [])
        try:
            v = project_to_variety(pts).result
        except (GeometryError, SolverError) as exc:
            for arm in arms:
                rows.append(dict(trial=i, arm=arm, seed=s, d_norm="", horizon="", status=f"solve_failed:{type(exc).__name__}"))
            continue
        dn = float(np.linalg.norm(d_vector(v)))
        for arm in arms:
            h, status = _horizon(v, k_max, arm == "variety_reprojected")
            rows.append(dict(trial=i, arm=arm, seed=s, d_norm=dn, horizon=h, status=status))
    for arm in ("random", "variety", "variety_reprojected"):
        hs = [horizon_rank(r["horizon"], k_max) for r in rows if r["arm"] == arm and r["status"] == "ok"]
        if not hs:
            continue
        med = statistics.median_low(hs)
        rows.append(dict(trial="summary", arm=arm, seed="", d_norm="", horizon=SURVIVED if med > k_max else med, status="median"))
    return rows


def summary(rows):
    """``{arm: median horizon}`` from the summary rows."""
    return {r["arm"]: r["horizon"] for r in rows if r["trial"] == "summary"}
