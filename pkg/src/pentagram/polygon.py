"""Polygons: representation, convexity, duality, normalization, sampling.

A :class:`Polygon` stores homogeneous vertices (one row per vertex, unit
norm) and is the currency of the projective operations. Affine polygons are
plain ``(n, 2)`` arrays; every function here that takes an affine polygon also
accepts a :class:`Polygon` and reads it in the standard chart.

Labeling conventions
--------------------
Vertex ``i`` of :func:`dual_polygon` is the side ``join(v[i], v[i+1])``. With
that choice ``dual_polygon(dual_polygon(P))[i] == P[i + DUAL_SHIFT]``.
"""
import json
import math
import os
import tempfile

import numpy as np

from .config import get_tol
from .errors import (
    CoincidentPoints,
    DegeneratePolygon,
    PointAtInfinity,
    TooFewVertices,
    VertexOnChartLine,
)
from .projective import LINE_AT_INFINITY, join, point_distance, to_affine, unit

MIN_VERTICES = 5
DUAL_SHIFT = 1


def cross2(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


class Polygon:
    """Cyclically labeled polygon in the projective plane.

    Parameters
    ----------
    vertices : array_like, shape (n, 3) or (n, 2)
        Homogeneous vertices, or affine ones (lifted with ``z = 1``).
    check : bool
        Validate that consecutive vertices are distinct and that no three
        consecutive vertices are collinear.
    """

    __slots__ = ("_v",)

    def __init__(self, vertices, tol=None, check=True):
        v = np.array(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] not in (2, 3):
            raise ValueError(f"vertices must have shape (n, 2) or (n, 3), got {v.shape}")
        if v.shape[1] == 2:
            v = np.hstack([v, np.ones((len(v), 1))])
        if len(v) < MIN_VERTICES:
            raise TooFewVertices(f"n must be at least {MIN_VERTICES}, got {len(v)}")
        if not np.all(np.isfinite(v)):
            raise DegeneratePolygon("non-finite vertex coordinates")
        v = unit(v)
        v.flags.writeable = False
        self._v = v
        if check:
            self._validate(tol)

    def _validate(self, tol):
        try:
            sides = self.sides(tol)
        except CoincidentPoints as exc:
            raise DegeneratePolygon("two consecutive vertices coincide") from exc
        bend = point_distance(np.roll(sides, 1, axis=0), sides)
        if np.any(bend <= get_tol(tol)):
            i = int(np.argmin(bend))
            raise DegeneratePolygon(f"vertices {i - 1}, {i}, {i + 1} are collinear")

    @classmethod
    def from_affine(cls, points, tol=None, check=True):
        return cls(np.asarray(points, dtype=float).reshape(-1, 2), tol=tol, check=check)

    @property
    def vertices(self):
        return self._v

    @property
    def n(self):
        return len(self._v)

    def __len__(self):
        return len(self._v)

    def __getitem__(self, i):
        return self._v[i % len(self._v)]

    def __repr__(self):
        return f"Polygon(n={self.n})"

    def sides(self, tol=None):
        """Side ``i`` is the line through vertices ``i`` and ``i + 1``."""
        return join(self._v, np.roll(self._v, -1, axis=0), tol)

    def affine(self, tol=None):
        """Vertices in the standard chart; raises PointAtInfinity."""
        return to_affine(self._v, tol)

    def shifted(self, k):
        """Relabel so that the new vertex ``i`` is the old vertex ``i + k``."""
        return Polygon(np.roll(self._v, -k, axis=0), check=False)

    def reversed(self):
        return Polygon(self._v[::-1], check=False)

    def transformed(self, m, tol=None):
        """Image under the projective map ``m``."""
        return Polygon(self._v @ np.asarray(m, dtype=float).T, tol=tol)


def as_polygon(p, tol=None):
    if isinstance(p, Polygon):
        return p
    return Polygon.from_affine(p, tol=tol)


def as_points(p):
    """Affine ``(n, 2)`` view of ``p``; raises PointAtInfinity."""
    if isinstance(p, Polygon):
        return p.affine()
    pts = np.asarray(p, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"affine polygon must have shape (n, 2), got {pts.shape}")
    return pts


def signed_area(points):
    pts = as_points(points)
    return 0.5 * float(np.sum(cross2(pts, np.roll(pts, -1, axis=0))))


def orient_ccw(points):
    pts = as_points(points)
    return pts if signed_area(pts) > 0 else pts[::-1].copy()


def diameter(points):
    pts = as_points(points)
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt(np.max(np.sum(diff * diff, axis=-1))))


def _turn_products(pts):
    prev = pts - np.roll(pts, 1, axis=0)
    nxt = np.roll(pts, -1, axis=0) - pts
    return prev, nxt, cross2(prev, nxt)


def is_convex(p, tol=None):
    """Strict convexity in the standard affine chart.

    A polygon with a vertex at infinity is not convex in this chart. Star
    polygons (all turns the same way but winding more than once) are
    rejected. A turn whose sine is at most ``tol`` (cross product of the two
    edge vectors relative to their lengths) raises DegeneratePolygon instead
    of being classified.
    """
    try:
        pts = as_points(p)
    except PointAtInfinity:
        return False
    if not np.all(np.isfinite(pts)):
        return False
    prev, nxt, c = _turn_products(pts)
    if np.any(np.abs(c) <= get_tol(tol) * np.linalg.norm(prev, axis=1) * np.linalg.norm(nxt, axis=1)):
        raise DegeneratePolygon("collinear consecutive vertices")
    if not (np.all(c > 0) or np.all(c < 0)):
        return False
    turning = np.sum(np.arctan2(c, np.sum(prev * nxt, axis=1)))
    return bool(abs(abs(turning) - 2 * math.pi) < 1e-6)


def contains_point(p, xy, tol=None):
    """Strict interior test: nonzero winding and off the boundary by more than ``tol * scale``."""
    pts = as_points(p)
    xy = np.asarray(xy, dtype=float)
    rel = pts - xy
    ang = np.arctan2(cross2(rel, np.roll(rel, -1, axis=0)), np.sum(rel * np.roll(rel, -1, axis=0), axis=1))
    winding = int(round(np.sum(ang) / (2 * math.pi)))
    if winding == 0:
        return False
    a = pts
    b = np.roll(pts, -1, axis=0)
    ab = b - a
    t = np.clip(np.sum((xy - a) * ab, axis=1) / np.sum(ab * ab, axis=1), 0.0, 1.0)
    dist = np.min(np.linalg.norm(a + t[:, None] * ab - xy, axis=1))
    scale = np.max(np.linalg.norm(pts - pts.mean(axis=0), axis=1))
    return bool(dist > get_tol(tol) * scale)


def dual_polygon(p, tol=None):
    """Polygon in the dual plane whose vertex ``i`` is side ``i`` of ``p``."""
    p = as_polygon(p, tol)
    return Polygon(p.sides(tol), tol=tol)


def chart_map(line, basis_seed=None):
    """A projective map sending ``line`` to the line at infinity.

    The third row is the line itself; the first two rows complete it to an
    orthonormal, positively oriented basis. ``basis_seed`` rotates that
    completion at random, giving a different but equally valid chart map.
    """
    u = unit(line)
    a = np.cross(u, [1.0, 0.0, 0.0] if abs(u[0]) < 0.9 else [0.0, 1.0, 0.0])
    a = unit(a)
    b = np.cross(u, a)
    if basis_seed is not None:
        theta = np.random.default_rng(basis_seed).uniform(0, 2 * math.pi)
        a, b = math.cos(theta) * a + math.sin(theta) * b, -math.sin(theta) * a + math.cos(theta) * b
    return np.vstack([a, b, u])


def convexity_in_chart(p, chart_line=LINE_AT_INFINITY, tol=None, basis_seed=None):
    """Convexity of ``p`` in the affine chart that omits ``chart_line``."""
    p = as_polygon(p, tol)
    u = unit(chart_line)
    if np.any(np.abs(p.vertices @ u) <= get_tol(tol)):
        raise VertexOnChartLine("a vertex lies on the chart line")
    h = chart_map(u, basis_seed)
    return is_convex(to_affine(p.vertices @ h.T), tol)


def centroid_inertia_normalize(p, tol=None):
    """Affine normalization: vertex centroid at 0, vertex second moment = identity.

    The residual rotation is fixed by putting vertex 0 on the positive
    x-axis. Returns the normalized ``(n, 2)`` array and the 3x3 affine map
    that produced it.
    """
    pts = as_points(p)
    c = pts.mean(axis=0)
    x = pts - c
    cov = x.T @ x / len(pts)
    w, q = np.linalg.eigh(cov)
    # aspect ratio sqrt(w0 / w1) at or below tol counts as flat
    if not np.all(np.isfinite(w)) or w[0] <= get_tol(tol) ** 2 * w[1]:
        raise DegeneratePolygon("rank-deficient second moment")
    whiten = q @ np.diag(w**-0.5) @ q.T
    y0 = whiten @ x[0]
    theta = math.atan2(y0[1], y0[0])
    ct, st = math.cos(theta), math.sin(theta)
    rot = np.array([[ct, st], [-st, ct]])
    lin = rot @ whiten
    m = np.eye(3)
    m[:2, :2] = lin
    m[:2, 2] = -lin @ c
    return x @ lin.T, m


def random_convex_polygon(n, rng_seed, batch=1024):
    """Random strictly convex counter-clockwise ``n``-gon, deterministic per seed.

    Vertices sit at sorted uniform angles (consecutive gaps at least
    ``0.1 / n``) with radii uniform in ``[0.5, 1]``; candidates that are not
    convex are rejected.
    """
    if n < MIN_VERTICES:
        raise TooFewVertices(f"n must be at least {MIN_VERTICES}, got {n}")
    rng = np.random.default_rng(rng_seed)
    min_gap = 0.1 / n
    while True:
        ang = np.sort(rng.uniform(0.0, 2 * math.pi, size=(batch, n)), axis=1)
        rad = rng.uniform(0.5, 1.0, size=(batch, n))
        gaps = np.diff(np.concatenate([ang, ang[:, :1] + 2 * math.pi], axis=1), axis=1)
        pts = np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=-1)
        prev = pts - np.roll(pts, 1, axis=1)
        nxt = np.roll(pts, -1, axis=1) - pts
        turns = cross2(prev, nxt)
        ok = np.all(gaps >= min_gap, axis=1) & np.all(turns > 1e-9, axis=1)
        hits = np.flatnonzero(ok)
        if len(hits):
            return pts[hits[0]].copy()


def regular_polygon(n, radius=1.0, center=(0.0, 0.0), phase=0.0):
    k = np.arange(n)
    ang = phase + 2 * math.pi * k / n
    return np.column_stack([center[0] + radius * np.cos(ang), center[1] + radius * np.sin(ang)])


def read_polygon_json(path):
    """Load ``{"vertices": [[x, y], ...]}``; at least five vertices."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("polygon file must be an object with a 'vertices' list")
    pts = np.asarray(data["vertices"], dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("'vertices' must be a list of [x, y] pairs")
    if len(pts) < MIN_VERTICES:
        raise TooFewVertices(f"n must be at least {MIN_VERTICES}, got {len(pts)}")
    return pts


def atomic_write(path, text):
    path = os.fspath(path)
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_polygon_json(path, points):
    pts = as_points(points)
    atomic_write(path, json.dumps({"vertices": [[float(x), float(y)] for x, y in pts]}, indent=1) + "\n")
