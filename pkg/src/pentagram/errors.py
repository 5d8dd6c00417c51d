"""Exception hierarchy.

Geometric failures derive from :class:`GeometryError` (a ``ValueError``),
iterative-solver failures from :class:`SolverError` (a ``RuntimeError``).
"""


class GeometryError(ValueError):
    pass


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class KernelHit(GeometryError):
    pass


class SingularMap(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    pass


class TooFewVertices(GeometryError):
    pass


class VertexOnChartLine(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class CenterAtInfinity(GeometryError):
    pass


class NoInteriorFixedPoint(GeometryError):
    pass


class AmbiguousFixedPoint(GeometryError):
    pass


class DegenerateOrbit(GeometryError):
    pass


class InternalInconsistency(AssertionError):
    """Two routes that must agree mathematically disagreed numerically."""


class SolverError(RuntimeError):
    pass


class MaxIterationsExceeded(SolverError):
    pass


class NoConvergence(SolverError):
    pass


class ConvexityLost(SolverError):
    pass


class ExhaustedAttempts(SolverError):
    pass
