"""The pentagram map ``D``, its inverse ``S``, orbits and convexity horizons.

Labeling
--------
Vertex ``i`` of ``D(P)`` is the intersection of the diagonals
``(i-1, i+1)`` and ``(i, i+2)``. Vertex ``i`` of ``S(P)`` is the intersection
of sides ``i-2`` and ``i`` (side ``j`` joins vertices ``j`` and ``j+1``).
With these choices ``D(S(P)) == P`` and ``S(D(P)) == P`` with no index shift,
and ``S(P)*[i] == D(P*)[i - 1]`` (see ``DUALITY_SHIFT``).
"""
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateOrbit,
    DegeneratePolygon,
    GeometryError,
    MaxIterationsExceeded,
    SolverError,
)
from .glick import TOL_DP, d_vector, relative_d_norm
from .polygon import (
    Polygon,
    as_points,
    as_polygon,
    centroid_inertia_normalize,
    contains_point,
    diameter,
    dual_polygon,
    is_convex,
    orient_ccw,
)
from .projective import join, meet, to_affine

# D(P*)[i] == S(P)*[i + DUALITY_SHIFT]
DUALITY_SHIFT = 1

SURVIVED = "survived"

# reprojection aims at the rounding floor and settles for REPROJECT_ACCEPT
REPROJECT_TOL = 1e-15
REPROJECT_ACCEPT = 1e-12


def pentagram_D(p, tol=None):
    """Pentagram map: intersect consecutive shortest diagonals."""
    p = as_polygon(p, tol)
    v = p.vertices
    try:
        short = join(np.roll(v, 1, axis=0), np.roll(v, -1, axis=0), tol)  # (i-1, i+1)
        return Polygon(meet(short, np.roll(short, -1, axis=0), tol), tol=tol)
    except (CoincidentPoints, CoincidentLines) as exc:
        raise DegeneratePolygon(f"pentagram map undefined: {exc}") from exc


def inverse_S(p, tol=None):
    """Inverse pentagram map: intersect second-nearest sides."""
    p = as_polygon(p, tol)
    try:
        s = p.sides(tol)
        return Polygon(meet(np.roll(s, 2, axis=0), s, tol), tol=tol)
    except (CoincidentPoints, CoincidentLines) as exc:
        raise DegeneratePolygon(f"inverse pentagram map undefined: {exc}") from exc


_MAPS = {"S": inverse_S, "D": pentagram_D}


class Termination(enum.Enum):
    REACHED_KMAX = "ReachedKmax"
    NON_CONVEX = "NonConvex"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class OrbitStep:
    k: int
    convex: bool
    d_norm: float
    diameter: float
    d_norm_normalized: float = math.nan


@dataclass
class OrbitReport:
    """Per-iteration record of an orbit.

    ``frames`` holds the normalized iterate of every recorded step that could
    be normalized (for plotting). ``to_raw`` maps the last normalized iterate
    back to the caller's coordinates.
    """

    steps: list
    terminated_reason: Termination
    frames: list = field(default_factory=list)
    to_raw: np.ndarray = field(default_factory=lambda: np.eye(3))

    @property
    def last(self):
        return self.steps[-1]


def _affine_d_norm(m, d):
    # d_P is covariant: x -> Ax + b sends d_P to A d_P / det A.
    # written via the SVD a = U diag(s) V^T so long orbits neither overflow nor underflow
    _, s, vt = np.linalg.svd(m[:2, :2])
    return float(np.linalg.norm((vt @ d) / s[::-1]))


def _stats(q_pts, frame_map):
    """(convex, d_norm, diameter, d_norm_normalized) of an iterate."""
    convex = is_convex(q_pts)
    raw = q_pts @ frame_map[:2, :2].T + frame_map[:2, 2]
    if convex:
        d = d_vector(q_pts)
        d_norm = _affine_d_norm(frame_map, d)
        try:
            normalized = centroid_inertia_normalize(q_pts)[0]
            d_normalized = float(np.linalg.norm(d_vector(normalized)))
        except GeometryError:
            d_normalized = math.nan
    else:
        d_norm = d_normalized = math.nan
    diam = diameter(raw) if np.all(np.isfinite(raw)) else math.inf
    return convex, d_norm, diam, d_normalized


def orbit(p, map="S", k_max=50, renormalize=True, reproject=None, stop_at_nonconvex=True):
    """Iterate ``S`` or ``D`` on a convex polygon, recording statistics.

    ``d_norm`` and ``diameter`` always describe the true, unnormalized orbit
    in the caller's coordinates; ``d_norm_normalized`` describes the
    normalized shape. Iterates are kept affinely normalized internally (from
    the first step with ``renormalize``, after step 5 without it) and the
    accumulated affine map back to the caller's coordinates is ``to_raw``.

    ``reproject`` pulls each iterate back onto ``d_P = 0``, which is drift
    control for orbits that start on that variety. The default switches it on
    only when ``k_max > 10`` and the input already satisfies
    ``|d_P| <= TOL_DP * scale``.
    """
    if map not in _MAPS:
        raise ValueError("map must be 'S' or 'D'")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    step = _MAPS[map]
    pts = orient_ccw(as_points(p))
    if reproject is None:
        reproject = k_max > 10 and relative_d_norm(pts) <= TOL_DP
    if reproject:
        from .variety import project_to_variety

    convex, d_norm, diam, d_normalized = _stats(pts, np.eye(3))
    steps = [OrbitStep(0, convex, d_norm, diam, d_normalized)]
    frames = []
    internal = pts
    to_raw = np.eye(3)
    try:
        frames.append(centroid_inertia_normalize(pts)[0])
    except GeometryError:
        return OrbitReport(steps, Termination.DEGENERATE, frames, to_raw)

    reason = Termination.REACHED_KMAX
    for k in range(1, k_max + 1):
        try:
            q = step(Polygon.from_affine(internal)).affine()
            convex, d_norm, diam, d_normalized = _stats(q, to_raw)
        except GeometryError:
            reason = Termination.DEGENERATE
            break
        steps.append(OrbitStep(k, convex, d_norm, diam, d_normalized))
        if not convex:
            try:
                frames.append(centroid_inertia_normalize(q)[0])
            except (GeometryError, np.linalg.LinAlgError):
                pass
            if stop_at_nonconvex:
                reason = Termination.NON_CONVEX
                break
            # nothing sensible to renormalize against; continue raw
            internal = q
            continue
        if reproject:
            try:
                q = project_to_variety(q, tol=REPROJECT_TOL).result
            except SolverError as exc:
                if getattr(exc, "residual", math.inf) > REPROJECT_ACCEPT:
                    reason = Termination.DEGENERATE
                    break
                q = exc.best
            except GeometryError:
                reason = Termination.DEGENERATE
                break
        qn, m = centroid_inertia_normalize(q)
        frames.append(qn)
        if renormalize or k > 5:
            internal = qn
            to_raw = to_raw @ np.linalg.inv(m)
        else:
            internal = q
    return OrbitReport(steps, reason, frames, to_raw)


def convexity_horizon(p, k_max=50, reproject=None, criterion="direct"):
    """Smallest ``k <= k_max`` with ``S^k(P)`` non-convex, else ``SURVIVED``.

    ``criterion="dual"`` decides convexity of ``S^k(P)`` through the dual
    orbit instead (see :func:`dual_convexity_flags`); it never reprojects.
    """
    if criterion == "dual":
        if reproject:
            raise ValueError("the dual criterion does not support reprojection")
        for k, ok in enumerate(dual_convexity_flags(p, k_max), start=1):
            if not ok:
                return k
        return SURVIVED
    if criterion != "direct":
        raise ValueError("criterion must be 'direct' or 'dual'")
    report = orbit(p, "S", k_max, renormalize=True, reproject=reproject)
    if report.terminated_reason is Termination.NON_CONVEX:
        return report.last.k
    if report.terminated_reason is Termination.DEGENERATE:
        raise DegenerateOrbit(f"orbit degenerated after step {report.last.k}")
    return SURVIVED


def dual_convexity_flags(p, k_max):
    """For ``k = 1..k_max``: does ``D^k(P*)`` contain the line at infinity?

    ``P`` is first translated so its vertex centroid ``O`` is the origin; the
    dual orbit is then read in the chart of the dual plane that omits ``O``,
    where the line at infinity sits at the origin. A flag is true iff
    ``D^k(P*)`` is convex there and contains that point in its interior,
    which holds exactly when ``S^k(P)`` is convex.
    """
    pts = orient_ccw(as_points(p))
    pts = pts - pts.mean(axis=0)
    dual = dual_polygon(pts)
    flags = []
    for _ in range(k_max):
        dual = pentagram_D(dual)
        chart = to_affine(dual.vertices)
        flags.append(bool(is_convex(chart) and contains_point(chart, (0.0, 0.0))))
    return flags


def limit_point_by_shrinking(p, diameter_tol=1e-9, max_iter=10_000):
    """Limit point of the forward pentagram orbit, by iterating ``D``.

    Iterates are kept affinely normalized and the accumulated affine map is
    carried along, which is the same orbit up to that map but free of
    cancellation as the true polygons shrink to a point. Stops once the true
    diameter is below ``diameter_tol`` and returns the true vertex centroid.
    """
    if not diameter_tol > 0:
        raise ValueError("diameter_tol must be positive")
    pts = orient_ccw(as_points(p))
    internal, m = centroid_inertia_normalize(pts)
    to_raw = np.linalg.inv(m)
    for _ in range(max_iter):
        raw_diam = diameter(internal @ to_raw[:2, :2].T)
        if raw_diam < diameter_tol:
            c = internal.mean(axis=0)
            return to_raw[:2, :2] @ c + to_raw[:2, 2]
        q = pentagram_D(Polygon.from_affine(internal)).affine()
        internal, m = centroid_inertia_normalize(q)
        to_raw = to_raw @ np.linalg.inv(m)
    raise MaxIterationsExceeded(f"diameter still above {diameter_tol} after {max_iter} iterations")
