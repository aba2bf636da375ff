"""Lattice polytopes, their normal fans, and the structure checks.

Everything is exact: vertices are integer points and facet normals are
primitive integer covectors.
"""
from goodcompact import (
    edges_affine_independent,
    face_in_direction,
    find_generic_covector,
    hull,
    is_convenient,
    is_developed,
    minkowski_sum,
    normal_fan,
    support_function,
)

square = hull([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
triangle = hull([(0, 0), (2, 0), (0, 1)])
print("square vertices  ", square.vertices)
print("triangle vertices", triangle.vertices)

# support function and the face it picks out
xi = (-1, -1)
print("H_triangle", xi, "=", support_function(triangle, xi))
print("face of triangle in direction", xi, face_in_direction(triangle, xi).points)

s = minkowski_sum(square, triangle)
print("square + triangle:", s.vertices)

fan = normal_fan(s)
print(f"normal fan: {len(fan.rays)} rays, {len(fan.cones)} cones")
for r in fan.rays:
    print("  ray", r)

# a segment and a transverse segment: independent edges, so developed
seg1 = hull([(0, 0), (1, 0)])
seg2 = hull([(0, 0), (1, 2)])
pair = [seg1, seg2]
print("edges independent:", bool(edges_affine_independent(pair)))
print("developed:        ", bool(is_developed(pair)))
print("convenient:       ", bool(is_convenient(normal_fan(minkowski_sum(*pair)), pair)))

# two parallel segments fail both
flat = [seg1, hull([(0, 1), (3, 1)])]
res = edges_affine_independent(flat)
print("parallel segments independent:", bool(res), "witness", [e.points for e in res.witness])
print("parallel segments developed:  ", bool(is_developed(flat)))

# the first covector, in enumeration order, that is generic for the triangle
print("generic covector for the triangle:", find_generic_covector(triangle))
