"""Translation, coning and lift of one configuration, and what their face counts say."""

from halfspace_lab.arrangement import sign_set
from halfspace_lab.deformations import coning, elementary_lift, face_count_report
from halfspace_lab.derived import same_open_face
from halfspace_lab.signs import format_sign, sort_signs

# two points on a line
U, a = [(1,), (1,)], (0, 1)
cone = coning(U, a).cone
print("coning regions:", [format_sign(s, compact=True) for s in sort_signs(sign_set(cone)) if 0 not in s])
print(face_count_report(U, a).as_dict())

# triangle configuration: the simple count formulas stop holding, the
# decomposition fCone = 2 fA + f(direction) does not
r = face_count_report([(-1, 0), (0, 1), (0, -1), (1, 1)], (0, 1, 0, 1))
print(r.as_dict())
assert r.fCone == 2 * r.fA + r.f_direction

# a and -a sit in opposite derived faces, yet their lifts look the same
U = [(-1, 0), (0, 1), (0, -1), (1, 1)]
a, b = (0, 1, 0, 1), (0, -1, 0, -1)
print("same derived face:", same_open_face(U, a, b))
print("lift sign sets equal:", sign_set(elementary_lift(U, a).lift) == sign_set(elementary_lift(U, b).lift))
print("cone sign sets equal:", sign_set(coning(U, a).cone) == sign_set(coning(U, b).cone))
