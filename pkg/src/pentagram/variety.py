"""Projection of convex polygons onto the variety ``d_P = 0``.

``d_P = 0`` is two scalar equations in the vertex coordinates, so moving a
single vertex (two unknowns) is generically enough to reach it. The solver
runs Newton's method in that vertex with a central finite-difference
Jacobian and step halving that keeps the polygon strictly convex.
"""
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvexityLost,
    DegeneratePolygon,
    ExhaustedAttempts,
    GeometryError,
    NoConvergence,
    SolverError,
)
from .glick import d_scale, d_vector
from .polygon import as_points, diameter, is_convex, orient_ccw, random_convex_polygon

MAX_ITER = 50
MIN_DAMPING = 2.0**-20
FD_STEP = 1e-6


@dataclass(frozen=True)
class SolveReport:
    result: np.ndarray
    iterations: int
    final_residual: float
    moved_vertex: int
    displacement: float


def _strictly_convex(pts):
    try:
        return is_convex(pts)
    except GeometryError:
        return False


def local_jacobian(pts, k, h=None):
    """2x2 Jacobian of ``d_P`` with respect to the coordinates of vertex ``k``."""
    pts = np.asarray(pts, dtype=float)
    if h is None:
        h = FD_STEP * diameter(pts)
    jac = np.empty((2, 2))
    for j in range(2):
        plus = pts.copy()
        minus = pts.copy()
        plus[k, j] += h
        minus[k, j] -= h
        jac[:, j] = (d_vector(plus) - d_vector(minus)) / (2 * h)
    return jac


def vertex_ranking(pts):
    """Vertices ordered by decreasing smallest singular value of their Jacobian."""
    pts = orient_ccw(as_points(pts))
    smin = []
    for k in range(len(pts)):
        try:
            smin.append(np.linalg.svd(local_jacobian(pts, k), compute_uv=False)[-1])
        except GeometryError:
            smin.append(-1.0)
    return [int(k) for k in np.argsort(smin)[::-1]]


def _newton(pts, k, tol, max_iter):
    start = pts[k].copy()
    h = FD_STEP * diameter(pts)
    d = d_vector(pts)
    residual = float(np.linalg.norm(d) / d_scale(pts))
    for it in range(max_iter + 1):
        if residual <= tol:
            return SolveReport(pts, it, residual, k, float(np.linalg.norm(pts[k] - start)))
        if it == max_iter:
            break
        try:
            step = -np.linalg.solve(local_jacobian(pts, k, h), d)
        except np.linalg.LinAlgError as exc:
            raise _stalled(NoConvergence("singular Jacobian"), pts, residual) from exc
        t = 1.0
        any_convex = False
        while t >= MIN_DAMPING:
            cand = pts.copy()
            cand[k] += t * step
            if _strictly_convex(cand):
                any_convex = True
                d_new = d_vector(cand)
                if np.linalg.norm(d_new) < np.linalg.norm(d):
                    pts, d = cand, d_new
                    residual = float(np.linalg.norm(d) / d_scale(pts))
                    break
            t /= 2
        else:
            if not any_convex:
                raise _stalled(ConvexityLost(f"no damped step keeps the polygon convex (vertex {k})"), pts, residual)
            raise _stalled(NoConvergence(f"no damped step reduces |d_P| (residual {residual:.3g})"), pts, residual)
    raise _stalled(NoConvergence(f"residual {residual:.3g} above {tol:g} after {max_iter} iterations"), pts, residual)


def _stalled(exc, pts, residual):
    # the best iterate reached, for callers that can live with it
    exc.best = pts
    exc.residual = residual
    return exc


def project_to_variety(p, vertex_index=None, tol=1e-12, max_iter=MAX_ITER):
    """Move one vertex of a strictly convex polygon until ``|d_P| <= tol * scale``.

    With ``vertex_index=None`` the vertices are tried in order of decreasing
    conditioning of their 2x2 Jacobian and the first success is returned.
    The returned polygon is oriented counter-clockwise. Failures raise a
    SolverError whose ``best`` and ``residual`` attributes hold the closest
    iterate reached.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    pts = orient_ccw(as_points(p)).copy()
    if not is_convex(pts):
        raise DegeneratePolygon("input polygon is not strictly convex")
    if vertex_index is not None:
        return _newton(pts, int(vertex_index) % len(pts), tol, max_iter)
    best = None
    for k in vertex_ranking(pts):
        try:
            return _newton(pts, k, tol, max_iter)
        except SolverError as exc:
            if best is None or exc.residual < best.residual:
                best = exc
    raise best


def sample_variety(n, count, rng_seed, tol=1e-12):
    """``count`` random strictly convex ``n``-gons with ``|d_P| <= tol * scale``.

    Candidate ``j`` is drawn with seed ``(rng_seed, j)``; every vertex is
    tried before a candidate is discarded.
    """
    out = []
    attempt = 0
    while len(out) < count:
        if attempt >= 10 * count:
            raise ExhaustedAttempts(f"only {len(out)} of {count} polygons after {attempt} draws")
        pts = random_convex_polygon(n, [rng_seed, attempt])
        attempt += 1
        try:
            out.append(project_to_variety(pts, tol=tol).result)
        except (GeometryError, SolverError):
            continue
    return out
