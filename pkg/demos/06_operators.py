"""Face and Sign operators between derived faces and sign sets."""

from halfspace_lab.operators import all_faces, fixed_point_check
from halfspace_lab.signs import format_sign

U = [(-1, 0), (0, 1), (0, -1), (1, 1)]
faces = sorted(all_faces(U))
singles = sum(fixed_point_check(U, [f]) for f in faces)
print(f"{singles} of {len(faces)} single faces are fixed points")
pair = faces[1:3]
print("pair", [format_sign(f) for f in pair], "fixed:", fixed_point_check(U, pair))

# with lifts, F and -F cannot be told apart
f = (1, 0, 1)
print("lift, single face", format_sign(f), "fixed:", fixed_point_check(U, [f], kind="lift"))
print("lift, with its opposite:", fixed_point_check(U, [f, (-1, 0, -1)], kind="lift"))
