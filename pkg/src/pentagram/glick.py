"""The vector d_P, Glick's operator G_P and its fixed point.

For an affine polygon with vertices ``v_i`` labeled counter-clockwise, let
``d_i = v_{i+1} - v_{i-1}`` and let ``A_i`` be the area of the triangle
``(v_{i-1}, v_i, v_{i+1})``. Then ``d_P = sum_i d_i / A_i``.

Glick's operator acts on homogeneous vectors by

    G_P(v) = n v - sum_i det(v_{i-1}, v, v_{i+1}) / det(v_{i-1}, v_i, v_{i+1}) * v_i

and is unchanged when any ``v_i`` is rescaled. With ``z = 1`` lifts the
denominator equals ``2 A_i``, so the third row of ``G_P`` is half of

    (-d_Py, d_Px, 2n + sum_i det(v_{i-1}, v_{i+1}) / A_i),

the covector returned by :func:`infinity_preimage_line`. ``G_P`` is affine
exactly when ``d_P = 0``.
"""
from dataclasses import dataclass

import numpy as np

from .config import get_tol
from .eigen3 import eig3
from .errors import AmbiguousFixedPoint, DegeneratePolygon, NoInteriorFixedPoint, PointAtInfinity
from .polygon import as_points, as_polygon, centroid_inertia_normalize, contains_point, cross2, orient_ccw
from .projective import is_affine, normalize_matrix, unit

# relative tolerance for "d_P = 0", measured against sum |d_i| / A_i
TOL_DP = 1e-9

# for pentagons, (G_P - 3 I) v_i == D(P)[i + CLEBSCH_SHIFT]: the vertex of the
# inner pentagram opposite to v_i
CLEBSCH_SHIFT = 2

# eigenvalues closer than this (relative) are treated as coincident
EIGEN_GAP = 1e-7


def _ears(p, tol=None):
    pts = orient_ccw(as_points(p))
    prev = np.roll(pts, 1, axis=0)
    nxt = np.roll(pts, -1, axis=0)
    d = nxt - prev
    area = 0.5 * cross2(pts - prev, nxt - pts)
    scale = np.max(np.linalg.norm(pts - pts.mean(axis=0), axis=1))
    if np.any(area <= get_tol(tol) * scale**2):
        raise DegeneratePolygon("a vertex triangle has non-positive area")
    return pts, prev, nxt, d, area


def d_vector(p, tol=None):
    """``sum_i d_i / A_i`` for a locally convex polygon (oriented CCW first)."""
    _, _, _, d, area = _ears(p, tol)
    return np.sum(d / area[:, None], axis=0)


def d_scale(p, tol=None):
    """``sum_i |d_i| / A_i``, the natural magnitude to compare ``|d_P|`` against."""
    _, _, _, d, area = _ears(p, tol)
    return float(np.sum(np.linalg.norm(d, axis=1) / area))


def relative_d_norm(p, tol=None):
    _, _, _, d, area = _ears(p, tol)
    terms = d / area[:, None]
    return float(np.linalg.norm(terms.sum(axis=0)) / np.sum(np.linalg.norm(terms, axis=1)))


def glick_matrix(p, tol=None):
    """Matrix of Glick's operator for a polygon (affine array or Polygon)."""
    v = as_polygon(p, tol).vertices
    vm = np.roll(v, 1, axis=0)
    vp = np.roll(v, -1, axis=0)
    w = np.cross(vp, vm)  # det(v_{i-1}, x, v_{i+1}) == x . w_i
    den = np.einsum("ij,ij->i", v, w)
    if np.any(np.abs(den) <= get_tol(tol)):
        raise DegeneratePolygon("three consecutive vertices are collinear")
    return len(v) * np.eye(3) - np.einsum("ij,ik->jk", v / den[:, None], w)


def infinity_preimage_line(p, tol=None):
    """Covector of the line that ``G_P`` sends to the line at infinity.

    Canonical scale: ``(-d_Py, d_Px, 2n + sum_i det(v_{i-1}, v_{i+1}) / A_i)``,
    which is twice the third row of :func:`glick_matrix`.
    """
    pts, prev, nxt, d, area = _ears(p, tol)
    dp = np.sum(d / area[:, None], axis=0)
    z = 2 * len(pts) + np.sum(cross2(prev, nxt) / area)
    return np.array([-dp[1], dp[0], z])


@dataclass(frozen=True)
class GlickData:
    d_vectors: np.ndarray
    areas: np.ndarray
    d_P: np.ndarray
    matrix: np.ndarray
    infinity_preimage: np.ndarray


def glick_data(p, tol=None):
    pts, _, _, d, area = _ears(p, tol)
    return GlickData(
        d_vectors=d,
        areas=area,
        d_P=np.sum(d / area[:, None], axis=0),
        matrix=glick_matrix(pts, tol),
        infinity_preimage=infinity_preimage_line(pts, tol),
    )


def glick_is_affine(p, tol=None):
    """Whether ``G_P`` preserves the line at infinity.

    Affinity is invariant under affine changes of coordinates, so affine
    polygons are first normalized (centroid at 0, unit second moment); this
    makes the threshold comparable to ``|d_P| / d_scale``. ``tol`` defaults
    to ``TOL_DP``.
    """
    tol = TOL_DP if tol is None else tol
    try:
        pts = as_points(p)
        q = centroid_inertia_normalize(pts)[0]
    except PointAtInfinity:
        q = p
    return is_affine(glick_matrix(q), tol)


def _fixed_point_by_iteration(g, start, max_iter=100_000):
    g2 = g @ g
    g2 = g2 / np.max(np.abs(g2))
    x = unit(start)
    for _ in range(max_iter):
        y = unit(g2 @ x)
        if y @ x < 0:
            y = -y
        if np.linalg.norm(y - x) < 1e-15:
            return y
        x = y
    return x


def interior_fixed_point(m, p, tol=None):
    """The unique fixed point of the projective map ``m`` inside conv(p).

    Candidates are the real eigenvectors of ``m``. If two eigenvalues nearly
    coincide, the point is found instead by iterating ``m^2`` from the vertex
    centroid, which converges because ``m`` contracts conv(p) into its
    interior. Returns homogeneous coordinates with ``z = 1``.
    """
    pts = orient_ccw(as_points(p))
    m = normalize_matrix(m)
    vals, vecs = eig3(m)
    degenerate = len(vals) >= 2 and np.min(np.abs(np.diff(np.sort(vals)))) / np.max(np.abs(vals)) < EIGEN_GAP
    if degenerate:
        x = _fixed_point_by_iteration(m, np.append(pts.mean(axis=0), 1.0))
        if abs(x[2]) <= get_tol(tol) or not contains_point(pts, x[:2] / x[2], tol):
            raise NoInteriorFixedPoint("fixed-point iteration left the polygon")
        return np.append(x[:2] / x[2], 1.0)
    inside = []
    for v in vecs.T:
        if abs(v[2]) <= get_tol(tol) * np.linalg.norm(v):
            continue
        xy = v[:2] / v[2]
        if contains_point(pts, xy, tol):
            inside.append(xy)
    if not inside:
        raise NoInteriorFixedPoint("no real eigenvector lies inside the polygon")
    if len(inside) > 1:
        raise AmbiguousFixedPoint(f"{len(inside)} eigenvectors lie inside the polygon")
    return np.append(inside[0], 1.0)


def glick_fixed_point(p, tol=None):
    """The fixed point of ``G_P`` in the interior of a convex polygon (``z = 1``).

    It coincides with the limit point of the forward pentagram orbit.
    """
    return interior_fixed_point(glick_matrix(p, tol), p, tol)


__all__ = [
    "CLEBSCH_SHIFT",
    "TOL_DP",
    "GlickData",
    "d_scale",
    "d_vector",
    "glick_data",
    "glick_fixed_point",
    "glick_is_affine",
    "glick_matrix",
    "infinity_preimage_line",
    "interior_fixed_point",
    "relative_d_norm",
]
