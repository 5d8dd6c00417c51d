"""Homogeneous coordinates on the real projective plane and its dual.

Points, lines and projective maps are plain numpy arrays: a point or a line
is a float array of shape ``(3,)``, a map is a ``(3, 3)`` array acting on
column vectors. Everything is understood modulo a nonzero scalar. The
results of :func:`join` and :func:`meet` are rescaled to unit Euclidean norm
so long orbits neither overflow nor underflow.
"""
import numpy as np

from .config import get_tol
from .errors import CoincidentLines, CoincidentPoints, KernelHit, PointAtInfinity, SingularMap

LINE_AT_INFINITY = np.array([0.0, 0.0, 1.0])
ORIGIN = np.array([0.0, 0.0, 1.0])

__all__ = [
    "LINE_AT_INFINITY",
    "ORIGIN",
    "embed",
    "join",
    "meet",
    "to_affine",
    "apply",
    "apply_to_line",
    "is_affine",
    "normalize_matrix",
    "proj_distance",
    "proj_equal",
    "points_equal",
    "point_distance",
    "unit",
]


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def embed(x, y=None):
    """Lift an affine point ``(x, y)`` to homogeneous coordinates ``(x, y, 1)``."""
    if y is None:
        x, y = x
    return np.array([float(x), float(y), 1.0])


def _cross_checked(a, b, tol, exc, what):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.cross(a, b)
    nc = np.linalg.norm(c, axis=-1)
    bound = get_tol(tol) * np.linalg.norm(a, axis=-1) * np.linalg.norm(b, axis=-1)
    if np.any(nc <= bound):
        raise exc(f"{what} are projectively equal")
    return c / nc[..., None] if c.ndim > 1 else c / nc


def join(p, q, tol=None):
    """Line through two points. Also vectorized over leading axes."""
    return _cross_checked(p, q, tol, CoincidentPoints, "points")


def meet(l1, l2, tol=None):
    """Intersection point of two lines. Also vectorized over leading axes."""
    return _cross_checked(l1, l2, tol, CoincidentLines, "lines")


def to_affine(p, tol=None):
    p = np.asarray(p, dtype=float)
    z = p[..., 2]
    if np.any(np.abs(z) <= get_tol(tol) * np.linalg.norm(p, axis=-1)):
        raise PointAtInfinity("point lies on the line at infinity")
    return p[..., :2] / z[..., None]


def apply(m, p, tol=None):
    """Image of point(s) ``p`` under the map ``m``."""
    m = np.asarray(m, dtype=float)
    p = np.asarray(p, dtype=float)
    q = p @ m.T
    bound = get_tol(tol) * np.linalg.norm(m, 2) * np.linalg.norm(p, axis=-1)
    if np.any(np.linalg.norm(q, axis=-1) <= bound):
        raise KernelHit("point lies in the kernel of the map")
    return q


def apply_to_line(m, l, tol=None):
    """Push a line forward: if ``p`` lies on ``l`` then ``m p`` lies on the result."""
    m = np.asarray(m, dtype=float)
    s = np.linalg.svd(m, compute_uv=False)
    if s[-1] <= get_tol(tol) * s[0]:
        raise SingularMap("cannot push a line through a rank-deficient map")
    return np.asarray(l, dtype=float) @ np.linalg.inv(m)


def normalize_matrix(m):
    """Canonical representative: largest-magnitude entry equal to +1."""
    m = np.asarray(m, dtype=float)
    k = np.argmax(np.abs(m))
    pivot = m.flat[k]
    if pivot == 0:
        raise ValueError("zero matrix has no projective class")
    return m / pivot


def is_affine(m, tol=None):
    """True if ``m`` maps the line at infinity to itself.

    The third row of ``m`` is the covector whose zero set is the preimage of
    the line at infinity, so the test is that this row is proportional to
    ``(0, 0, 1)`` after normalizing ``m`` to unit largest entry.
    """
    tol = get_tol(tol)
    row = normalize_matrix(m)[2]
    return bool(max(abs(row[0]), abs(row[1])) <= tol and abs(row[2]) > tol)


def proj_distance(a, b):
    return float(np.max(np.abs(normalize_matrix(a) - normalize_matrix(b))))


def proj_equal(a, b, tol=None):
    return proj_distance(a, b) <= get_tol(tol)


def point_distance(p, q):
    """Sine of the angle between two homogeneous vectors (0 when projectively equal)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return np.linalg.norm(np.cross(p, q), axis=-1) / (
        np.linalg.norm(p, axis=-1) * np.linalg.norm(q, axis=-1)
    )


def points_equal(p, q, tol=None):
    """Projective equality; vectorized, true only if every pair matches."""
    return bool(np.all(point_distance(p, q) <= get_tol(tol)))
