"""Polygons on d_P = 0 stay convex under S; random ones lose convexity at once."""
import sys
from pathlib import Path


from pentagram import convexity_horizon, glick_is_affine, orbit, project_to_variety, random_convex_polygon
from pentagram.experiment import run_experiment, summary
from pentagram.svg import orbit_svg

p = random_convex_polygon(5, 4)
print("== one Newton projection ==")
rep = project_to_variety(p, vertex_index=0)
print(f"moved vertex {rep.moved_vertex} by {rep.displacement:.4f} in {rep.iterations} iterations")
print(f"relative |d_P|: {rep.final_residual:.1e}   Glick operator affine: {glick_is_affine(rep.result)}")

print("== horizons ==")
print("random pentagon        :", convexity_horizon(p, 50))
print("projected, raw floats  :", convexity_horizon(rep.result, 50, reproject=False))
print("projected, reprojected :", convexity_horizon(rep.result, 50, reproject=True))
print("(rounding pushes the orbit off the variety, and S amplifies the drift)")

print("== a small experiment ==")
rows = run_experiment(5, 40, k_max=50, seed=1)
print("median horizons:", summary(rows))
failed = [r for r in rows if r["status"].startswith("solve_failed")]
print("failed projections:", len(failed))

if len(sys.argv) > 1:
    out = Path(sys.argv[1])
    frames = orbit(rep.result, "S", 8, reproject=True).frames
    out.write_text(orbit_svg(frames))
    print("wrote", out)
