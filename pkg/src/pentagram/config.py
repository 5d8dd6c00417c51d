"""Global numerical tolerance.

All projective comparisons share one relative tolerance. Functions that
accept ``tol=None`` read it from here.

>>> from pentagram import config
>>> with config.tolerance(1e-6):
...     config.get_tol()
1e-06
"""
from contextlib import contextmanager

DEFAULT_TOL = 1e-9

_tol = DEFAULT_TOL


def get_tol(tol=None):
    if tol is not None:
        return float(tol)
    return _tol


def set_tol(value):
    global _tol
    value = float(value)
    if not value > 0:
        raise ValueError("tolerance must be positive")
    _tol = value


@contextmanager
def tolerance(value):
    old = _tol
    set_tol(value)
    try:
        yield
    finally:
        set_tol(old)
