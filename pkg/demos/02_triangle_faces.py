"""Faces and normal fans of polyhedra P(a, I, J, K) = {x : Ux = a on I, <= on J, < on K}."""

from halfspace_lab.exactla import matrix
from halfspace_lab.jsonio import triple_to_json
from halfspace_lab.polyhedron import Tetrad, enumerate_faces, is_bounded, normal_fan_equal, same_point_set

U = matrix([(-1, 0), (0, 1), (0, -1), (1, 1)])
triangle = Tetrad.of((0, 1, 0, 1))
print("bounded:", is_bounded(U, triangle))
for f in enumerate_faces(U, triangle):
    print(f"  dim {f.dimension}  active {triple_to_json(f.active)}  at {[str(x) for x in f.witness]}")

# raising the y <= b2 cap past the apex changes nothing
print("same set for b2 = 3/2:", same_point_set(U, triangle, triangle.with_offset((0, "3/2", 0, 1))))
# lowering it below the apex cuts a corner: the fan changes
print("same fan for b2 = 3/4:", normal_fan_equal(U, triangle, triangle.with_offset((0, "3/4", 0, 1))))
# scaling the offset keeps the fan
print("same fan for 2a:", normal_fan_equal(U, triangle, triangle.with_offset((0, 2, 0, 2))))
