"""Covector axioms and equivalence up to relabelling and reorientation."""

from halfspace_lab.arrangement import Arrangement, sign_set
from halfspace_lab.deformations import coning
from halfspace_lab.om import CovectorSystem, check_covector_axioms, om_equivalent_up_to_symmetry
from halfspace_lab.verify import composition_mutation

A = Arrangement.of([(1, 0), (0, 1), (1, 1)], (0, 0, 2))
B = Arrangement.of([(0, 1), (1, 0), (-1, -1)], (0, 0, -2))
L1, L2 = CovectorSystem.of(sign_set(A)), CovectorSystem.of(sign_set(B))
# affine sign sets miss the zero vector; the coning is a genuine covector set
print("affine signs:", check_covector_axioms(L1))
C = CovectorSystem.of(sign_set(coning(A.U, A.a).cone))
print("coning:", check_covector_axioms(C), "size", len(C.covectors))
print("after dropping a composition:", check_covector_axioms(composition_mutation(C)))
print("equal as sets:", L1 == L2)
for w in om_equivalent_up_to_symmetry(L1, L2, all_witnesses=True):
    print("  perm", [p + 1 for p in w.perm], "reorient", sorted(s + 1 for s in w.reoriented))
