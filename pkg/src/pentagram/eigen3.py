"""Real eigenpairs of a general real 3x3 matrix, in closed form.

Eigenvalues come from the characteristic cubic (trigonometric form when it
has three real roots, Cardano otherwise) polished by one Newton step on the
cubic; eigenvectors are the null directions of ``A - lambda I`` extracted as
the largest cross product of two of its rows, then polished by one step of
inverse iteration.
"""
import math

import numpy as np


def char_poly(a):
    """Coefficients ``(c2, c1, c0)`` of ``lambda^3 + c2 lambda^2 + c1 lambda + c0``."""
    tr = np.trace(a)
    minors = (
        a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        + a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0]
        + a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]
    )
    return -tr, minors, -np.linalg.det(a)


def real_cubic_roots(c2, c1, c0):
    """Real roots of ``x^3 + c2 x^2 + c1 x + c0``, ascending."""
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if p < 0 and disc <= 0:
        r = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * r)
        phi = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        ts = [r * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3)]
    else:
        s = math.sqrt(max(disc, 0.0))
        ts = [np.cbrt(-q / 2.0 + s) + np.cbrt(-q / 2.0 - s)]
    roots = []
    for t in ts:
        x = t - shift
        f = ((x + c2) * x + c1) * x + c0
        df = (3.0 * x + 2.0 * c2) * x + c1
        if df != 0:
            x -= f / df
        roots.append(float(x))
    return sorted(roots)


def null_vector(b):
    """Unit vector spanning the (numerical) kernel of a rank-2 3x3 matrix."""
    candidates = [np.cross(b[0], b[1]), np.cross(b[0], b[2]), np.cross(b[1], b[2])]
    v = max(candidates, key=np.linalg.norm)
    n = np.linalg.norm(v)
    if n == 0:
        raise np.linalg.LinAlgError("matrix has rank below 2")
    return v / n


def eig3(a):
    """Real eigenvalues and unit eigenvectors (columns) of a 3x3 matrix.

    Returns ``(values, vectors)`` with ``vectors[:, k]`` belonging to
    ``values[k]``; complex-conjugate pairs are dropped.
    """
    a = np.asarray(a, dtype=float)
    scale = np.max(np.abs(a))
    if scale == 0:
        return np.zeros(3), np.eye(3)
    m = a / scale
    lams = real_cubic_roots(*char_poly(m))
    vals, vecs = [], []
    eye = np.eye(3)
    for lam in lams:
        b = m - lam * eye
        try:
            v = null_vector(b)
        except np.linalg.LinAlgError:
            continue
        # inverse iteration with a slightly perturbed shift
        try:
            w = np.linalg.solve(b + 1e-10 * eye, v)
            if np.all(np.isfinite(w)) and np.linalg.norm(w) > 0:
                v = w / np.linalg.norm(w)
        except np.linalg.LinAlgError:
            pass
        vals.append(lam * scale)
        vecs.append(v)
    return np.array(vals), np.array(vecs).T.reshape(3, len(vecs))
