"""Inscribed and circumscribed conics of a pentagon, Kasner's map and R_P."""
import math

import numpy as np

from pentagram import circumscribed_conic, inscribed_conic, is_concentric, kasner_I, pentagram_D, r_operator, random_convex_polygon, regular_polygon
from pentagram.conics import center_distance, conic_center
from pentagram.projective import point_distance, proj_distance, to_affine
from pentagram.variety import project_to_variety

np.set_printoptions(precision=5, suppress=True)

print("== regular pentagon: concentric circles ==")
p = regular_polygon(5)
print("circumscribed:\n", circumscribed_conic(p))
print("inscribed    :\n", inscribed_conic(p))
print("inscribed radius squared, cos(pi/5)^2 =", math.cos(math.pi / 5) ** 2)

print("== a random pentagon ==")
p = random_convex_polygon(5, 9)
print("center C:", to_affine(conic_center(circumscribed_conic(p))))
print("center I:", to_affine(conic_center(inscribed_conic(p))))
print("concentric:", is_concentric(p))

print("== Kasner: D and I commute ==")
a, b = pentagram_D(kasner_I(p)).vertices, kasner_I(pentagram_D(p)).vertices
print(f"max mismatch: {np.max(point_distance(a, b)):.1e}")

print("== R_P is an invariant of the pentagram map ==")
print(f"|R_D(P) - R_P| = {proj_distance(r_operator(pentagram_D(p)), r_operator(p)):.1e}")

print("== on the variety d_P = 0 the centers coincide ==")
q = project_to_variety(p).result
dist, scale = center_distance(q)
print(f"center distance / scale: {dist / scale:.1e}   concentric: {is_concentric(q)}")
