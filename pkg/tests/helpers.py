"""Shared helpers for the test suite."""
import numpy as np

from pentagram.polygon import Polygon, random_convex_polygon
from pentagram.projective import point_distance


def hom(p):
    """Homogeneous vertex array of a Polygon or an (n, 2) array."""
    if isinstance(p, Polygon):
        return p.vertices
    p = np.asarray(p, dtype=float)
    return np.hstack([p, np.ones((len(p), 1))]) if p.shape[1] == 2 else p


def vertex_error(a, b, shift=0):
    """Largest projective distance between a[i] and b[i + shift]."""
    return float(np.max(point_distance(hom(a), np.roll(hom(b), -shift, axis=0))))


def random_polygons(count, sizes=(5,), base_seed=0):
    """``count`` random convex polygons cycling through ``sizes``."""
    return [random_convex_polygon(sizes[i % len(sizes)], base_seed + i) for i in range(count)]


def random_projective_map(rng, affine=False):
    while True:
        m = rng.normal(size=(3, 3))
        if affine:
            m[2] = (0.0, 0.0, 1.0)
        if abs(np.linalg.det(m)) > 0.2:
            return m


def hull_samples(pts, count, rng):
    """Random points in the convex hull via Dirichlet weights on the vertices."""
    w = rng.dirichlet(np.ones(len(pts)), size=count)
    return w @ pts
