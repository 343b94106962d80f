"""Circuits of U and the derived arrangement that sorts offsets by combinatorial type."""

from halfspace_lab.derived import enumerate_circuits, enumerate_derived_faces, locate_open_face
from halfspace_lab.exactla import matrix
from halfspace_lab.signs import format_sign

U = matrix([(-1, 0), (0, 1), (0, -1), (1, 1)])
for c in enumerate_circuits(U):
    print("circuit", [i + 1 for i in c.support], [str(x) for x in c.vector])

faces = enumerate_derived_faces(U)
print(len(faces), "open derived faces")
for name, a in [("a", (0, 1, 0, 1)), ("b1", (0, "3/2", 0, 1)), ("b2", (0, "3/4", 0, 1)), ("b3", (0, 0, 0, 1))]:
    print(f"{name:3} lies in face {format_sign(locate_open_face(U, a))}")
