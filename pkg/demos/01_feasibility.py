"""Deciding mixed strict/weak systems exactly, with a certificate either way."""

from halfspace_lab.feasibility import MixedSystem, Rel, decide, optimize
from halfspace_lab.jsonio import decision_to_json

# a half-open unit square: 0 <= x < 1, 0 < y <= 1
square = MixedSystem.build(2, [
    ((1, 0), Rel.GE, 0), ((1, 0), Rel.LT, 1),
    ((0, 1), Rel.GT, 0), ((0, 1), Rel.LE, 1),
])
d = decide(square)
print("square:", decision_to_json(d))
assert square.satisfied_by(d.witness)

# x <= 0 and x > 0 only meet if strictness is ignored
clash = MixedSystem.build(1, [((1,), Rel.LE, 0), ((1,), Rel.GT, 0)])
d = decide(clash)
print("clash:", decision_to_json(d))
assert d.certificate.check(clash)

print("max x + y on the closed square:", optimize((1, 1), MixedSystem.build(2, [
    ((1, 0), Rel.GE, 0), ((1, 0), Rel.LE, 1), ((0, 1), Rel.GE, 0), ((0, 1), Rel.LE, 1),
])))
