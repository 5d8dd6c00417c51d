"""The pentagram map, its inverse, and why convexity is fragile one way only."""
import numpy as np

from pentagram import Polygon, convexity_horizon, inverse_S, is_convex, orbit, pentagram_D, random_convex_polygon, regular_polygon
from pentagram.maps import DUALITY_SHIFT
from pentagram.polygon import dual_polygon
from pentagram.projective import point_distance

np.set_printoptions(precision=5, suppress=True)

print("== 1. regular pentagon ==")
p = regular_polygon(5)
d, s = pentagram_D(p).affine(), inverse_S(p).affine()
print("D(P) radius:", np.hypot(*d[0]), " (golden-ratio shrink, 1/phi^2)")
print("S(P) radius:", np.hypot(*s[0]), " (phi^2)")

print("== 2. D and S undo each other, label for label ==")
q = Polygon(random_convex_polygon(8, 0))
err = np.max(point_distance(pentagram_D(inverse_S(q)).vertices, q.vertices))
print(f"octagon, max |D(S(P)) - P| (projective): {err:.1e}")

print("== 3. S(P)* is D(P*) ==")
lhs = pentagram_D(dual_polygon(q)).vertices
rhs = np.roll(dual_polygon(inverse_S(q)).vertices, -DUALITY_SHIFT, axis=0)
print(f"max mismatch: {np.max(point_distance(lhs, rhs)):.1e}")

print("== 4. D keeps convexity, S usually does not ==")
bad = sum(not is_convex(pentagram_D(random_convex_polygon(7, k))) for k in range(300))
print("heptagons made non-convex by D:", bad, "/ 300")
horizons = [convexity_horizon(random_convex_polygon(5, k), 50, reproject=False) for k in range(300)]
print("S-horizons of random pentagons:", np.bincount([h for h in horizons if h != "survived"]))

print("== 5. an orbit report ==")
rep = orbit(random_convex_polygon(6, 3), "D", 6)
for step in rep.steps:
    print(f"  k={step.k}  convex={step.convex}  |d_P|={step.d_norm:.6f}  diameter={step.diameter:.4f}")
print("  |d_P| stays put along this D-orbit while the polygons shrink to the limit point.")
