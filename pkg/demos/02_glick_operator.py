"""Glick's operator: a projective contraction whose fixed point is the limit point."""
import numpy as np

from pentagram import d_vector, glick_fixed_point, glick_matrix, infinity_preimage_line, limit_point_by_shrinking, random_convex_polygon
from pentagram.glick import CLEBSCH_SHIFT
from pentagram.maps import pentagram_D
from pentagram.polygon import contains_point, dual_polygon
from pentagram.projective import is_affine, point_distance, proj_distance

np.set_printoptions(precision=6, suppress=True)
pts = random_convex_polygon(7, 11)

print("== d_P and the line G_P sends to infinity ==")
print("d_P                  :", d_vector(pts))
line = infinity_preimage_line(pts)
print("preimage of infinity :", line)
print("2 x third row of G_P :", 2 * glick_matrix(pts)[2])
print("G_P affine?          :", is_affine(glick_matrix(pts)), "(only when d_P = 0)")

print("== fixed point vs limit point ==")
fp = glick_fixed_point(pts)[:2]
lp = limit_point_by_shrinking(pts)
print("eigenvector of G_P   :", fp)
print("shrinking D-orbit    :", lp)
print(f"distance             : {np.linalg.norm(fp - lp):.1e}")

print("== contraction of the convex hull ==")
rng = np.random.default_rng(0)
g = glick_matrix(pts)
samples = rng.dirichlet(np.ones(len(pts)), size=1000) @ pts
images = np.c_[samples, np.ones(len(samples))] @ g.T
print("images inside:", all(contains_point(pts, y[:2] / y[2]) for y in images), "for 1000 hull points")

print("== duality: G of the dual polygon is the transpose ==")
print(f"distance: {proj_distance(glick_matrix(dual_polygon(pts)), g.T):.1e}")

print("== pentagons: G_P - 3 I is the pentagram map as a linear map ==")
pent = random_convex_polygon(5, 2)
v = np.c_[pent, np.ones(5)]
images = v @ (glick_matrix(pent) - 3 * np.eye(3)).T
target = np.roll(pentagram_D(pent).vertices, -CLEBSCH_SHIFT, axis=0)
print(f"max mismatch: {np.max(point_distance(images, target)):.1e}")
