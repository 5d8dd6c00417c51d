"""Pentagon conics: circumscribed and inscribed conics, centers, Kasner map, R_P.

A conic is a symmetric 3x3 array ``q`` up to scale; point ``x`` lies on it
when ``x^T q x = 0``. Conics returned here are scaled so the largest-magnitude
entry is +1.

Labeling: vertex ``i`` of :func:`kasner_I` is the tangency point on side
``i`` (between vertices ``i`` and ``i+1``). Kasner's commutation then reads
``D(I(P))[i] == I(D(P))[i + KASNER_SHIFT]`` and ``R_P(P)[i] ==
I(I(P))[i + R_SHIFT]``.
"""
from dataclasses import dataclass

import numpy as np

from .config import get_tol
from .errors import (
    CenterAtInfinity,
    DegenerateConfiguration,
    DegenerateConic,
    DegeneratePolygon,
    InternalInconsistency,
    PointAtInfinity,
)
from .glick import interior_fixed_point
from .polygon import Polygon, as_polygon, centroid_inertia_normalize
from .projective import LINE_AT_INFINITY, is_affine, normalize_matrix, to_affine, unit

KASNER_SHIFT = 0
R_SHIFT = -1

RANK_RATIO = 1e-10
TOL_CONCENTRIC = 1e-7


def _sym(c):
    a, b, cc, d, e, f = c
    return np.array([[a, b / 2, d / 2], [b / 2, cc, e / 2], [d / 2, e / 2, f]])


def _fit(pts):
    x, y, z = unit(pts).T
    design = np.column_stack([x * x, x * y, y * y, x * z, y * z, z * z])
    _, s, vt = np.linalg.svd(design)
    if s[4] <= RANK_RATIO * s[0]:
        raise DegenerateConfiguration("the five points do not determine a unique conic")
    return normalize_matrix(_sym(vt[-1]))


def _require_proper(q, tol):
    if abs(np.linalg.det(q)) <= get_tol(tol) * np.linalg.norm(q) ** 3:
        raise DegenerateConic("conic is degenerate (splits into lines)")


def _normalizer(p):
    """Affine conditioning map for ``p`` (identity if a vertex is at infinity)."""
    try:
        return centroid_inertia_normalize(p.affine())[1]
    except PointAtInfinity:
        return np.eye(3)


def conic_through_points(pts, tol=None, proper=True):
    """Conic through five points, from the null space of the 5x6 incidence matrix."""
    pts = np.asarray(pts, dtype=float)
    if pts.shape == (5, 2):
        pts = np.hstack([pts, np.ones((5, 1))])
    if pts.shape != (5, 3):
        raise ValueError("need exactly five points")
    try:
        t = centroid_inertia_normalize(to_affine(pts))[1]
    except (PointAtInfinity, DegeneratePolygon):
        t = np.eye(3)
    local = _fit(pts @ t.T)
    # properness is judged in the normalized frame, where the conic is well scaled
    if proper:
        _require_proper(local, tol)
    return normalize_matrix(t.T @ local @ t)


def circumscribed_conic(p, tol=None):
    p = as_polygon(p, tol)
    if p.n != 5:
        raise ValueError("circumscribed conic is defined here for pentagons only")
    return conic_through_points(p.vertices, tol)


def inscribed_conic(p, tol=None):
    """Conic tangent to the five sides: the dual of the conic through the sides."""
    p = as_polygon(p, tol)
    if p.n != 5:
        raise ValueError("inscribed conic is defined here for pentagons only")
    t = _normalizer(p)
    sides = p.transformed(t).sides(tol)
    dual = _fit(sides)
    _require_proper(dual, tol)
    q = np.linalg.inv(dual)
    q = normalize_matrix(t.T @ ((q + q.T) / 2) @ t)
    return q


def tangency_residual(q, line):
    """Scale-free ``l^T q^-1 l``; zero when ``line`` is tangent to ``q``."""
    qi = np.linalg.inv(q)
    line = unit(line)
    return np.abs(np.einsum("...i,ij,...j->...", line, qi, line)) / np.linalg.norm(qi)


def incidence_residual(q, pts):
    pts = unit(pts)
    return np.abs(np.einsum("...i,ij,...j->...", pts, q, pts)) / np.linalg.norm(q)


def conic_center(q, require_finite=False, tol=None):
    """Pole of the line at infinity. Parabolas give a point at infinity.

    With ``require_finite`` such a center raises CenterAtInfinity.
    """
    c = unit(np.linalg.solve(q, LINE_AT_INFINITY))
    if require_finite and abs(c[2]) <= get_tol(tol):
        raise CenterAtInfinity("conic is a parabola; its center is at infinity")
    return c


def r_operator(p, tol=None):
    """``R_P = Q_I^{-1} Q_C``: sends A to the pole (w.r.t. Q_I) of A's polar w.r.t. Q_C."""
    return normalize_matrix(np.linalg.solve(inscribed_conic(p, tol), circumscribed_conic(p, tol)))


def r_fixed_point(p, tol=None):
    """The fixed point of ``R_P`` inside a convex pentagon (``z = 1``)."""
    return interior_fixed_point(r_operator(p, tol), as_polygon(p, tol).affine(), tol)


def kasner_I(p, tol=None):
    """Pentagon of tangency points of the sides with the inscribed conic."""
    p = as_polygon(p, tol)
    q = inscribed_conic(p, tol)
    return Polygon(np.linalg.solve(q, p.sides(tol).T).T, tol=tol)


@dataclass(frozen=True)
class PentagonConicData:
    circumscribed: np.ndarray
    inscribed: np.ndarray
    r_map: np.ndarray
    center_C: np.ndarray
    center_I: np.ndarray


def pentagon_conic_data(p, tol=None):
    qc = circumscribed_conic(p, tol)
    qi = inscribed_conic(p, tol)
    return PentagonConicData(
        circumscribed=qc,
        inscribed=qi,
        r_map=normalize_matrix(np.linalg.solve(qi, qc)),
        center_C=conic_center(qc),
        center_I=conic_center(qi),
    )


def center_distance(p, tol=None):
    """Affine distance between the two centers, and the circumscribed scale."""
    p = as_polygon(p, tol)
    data = pentagon_conic_data(p, tol)
    cc = to_affine(conic_center(data.circumscribed, True, tol))
    ci = to_affine(conic_center(data.inscribed, True, tol))
    scale = np.sqrt(np.mean(np.sum((p.affine() - cc) ** 2, axis=1)))
    return float(np.linalg.norm(cc - ci)), float(scale)


def is_concentric(p, tol_c=TOL_CONCENTRIC, tol=None):
    """Whether the inscribed and circumscribed conics share a center.

    Decided twice, by the center distance (relative to the circumscribed
    scale) and by affinity of ``R_P`` on the affinely normalized pentagon;
    disagreement raises InternalInconsistency.
    """
    p = as_polygon(p, tol)
    dist, scale = center_distance(p, tol)
    by_center = dist <= tol_c * scale
    by_map = is_affine(r_operator(p.transformed(_normalizer(p)), tol), tol_c)
    if by_center != by_map:
        raise InternalInconsistency(
            f"center test says {by_center} (distance/scale={dist / scale:.3g}) but R_P affinity says {by_map}"
        )
    return by_center
