"""Inverse pentagram map, Glick's operator and pentagon conics.

Numerical tools for deciding which convex polygons stay convex under every
iterate of the inverse pentagram map, and for checking the equivalent
conditions: ``d_P = 0``, Glick's operator being affine, and (for pentagons)
concentric inscribed and circumscribed conics.
"""
from .conics import (
    circumscribed_conic,
    conic_center,
    conic_through_points,
    inscribed_conic,
    is_concentric,
    kasner_I,
    pentagon_conic_data,
    r_operator,
)
from .glick import (
    d_vector,
    glick_data,
    glick_fixed_point,
    glick_is_affine,
    glick_matrix,
    infinity_preimage_line,
    relative_d_norm,
)
from .maps import (
    SURVIVED,
    convexity_horizon,
    inverse_S,
    limit_point_by_shrinking,
    orbit,
    pentagram_D,
)
from .polygon import (
    Polygon,
    centroid_inertia_normalize,
    convexity_in_chart,
    dual_polygon,
    is_convex,
    random_convex_polygon,
    regular_polygon,
)
from .projective import apply, apply_to_line, is_affine, join, meet, proj_equal, to_affine
from .variety import project_to_variety, sample_variety

__version__ = "0.1.0"
