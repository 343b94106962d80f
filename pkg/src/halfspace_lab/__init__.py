"""Exact rational tools for deformed hyperplane arrangements and tetrad polyhedra.

Everything is computed with :class:`fractions.Fraction`; there is no
floating point.  Python-level indices are 0-based, JSON and CLI indices
1-based.
"""

from .arrangement import (
    Arrangement,
    ArrangementFace,
    combinatorially_equivalent,
    face_poset,
    intersection_poset,
    normally_equivalent_translations,
    relabel,
    reorient,
    semilattice_equivalent,
    sign_equivalent,
    sign_of_point,
    sign_set,
    valid_active_triple,
)
from .deformations import (
    coning,
    elementary_lift,
    face_count_report,
    parallel_translation,
    transport_sign_coning,
    transport_sign_lift,
)
from .derived import (
    Circuit,
    DerivedFaceRef,
    derived_arrangement,
    enumerate_circuits,
    enumerate_derived_faces,
    locate_open_face,
    same_open_face,
)
from .errors import (
    CertificateError,
    DeskScaleExceeded,
    DimensionMismatch,
    EmptyPolyhedron,
    HalfspaceError,
    InconsistentInput,
    LoopElement,
    MultiArrangementUnsupported,
    NotAFace,
    PointNotInPolyhedron,
)
from .exactla import nullspace, parse_rational, rank, rref, solve_linear
from .feasibility import (
    Constraint,
    FarkasCertificate,
    Feasible,
    Infeasible,
    MixedSystem,
    Optimal,
    Rel,
    Unbounded,
    decide,
    optimize,
)
from .om import (
    CovectorSystem,
    affine_covectors,
    check_covector_axioms,
    om_equivalent,
    om_equivalent_up_to_symmetry,
)
from .operators import face_operator, face_operator_set, fixed_point_check, sign_operator
from .polyhedron import (
    ActiveTriple,
    Cone,
    FaceRecord,
    Tetrad,
    active_triple_at,
    cone_contains,
    enumerate_faces,
    face_dimension,
    is_bounded,
    is_empty,
    normal_cone,
    normal_fan_equal,
    open_interior_point,
    support_value,
)

__version__ = "0.1.0"

__all__ = [
    "ActiveTriple",
    "Arrangement",
    "ArrangementFace",
    "CertificateError",
    "Circuit",
    "Cone",
    "Constraint",
    "CovectorSystem",
    "DerivedFaceRef",
    "DeskScaleExceeded",
    "DimensionMismatch",
    "EmptyPolyhedron",
    "FaceRecord",
    "FarkasCertificate",
    "Feasible",
    "HalfspaceError",
    "InconsistentInput",
    "Infeasible",
    "LoopElement",
    "MixedSystem",
    "MultiArrangementUnsupported",
    "NotAFace",
    "Optimal",
    "PointNotInPolyhedron",
    "Rel",
    "Tetrad",
    "Unbounded",
    "active_triple_at",
    "affine_covectors",
    "check_covector_axioms",
    "combinatorially_equivalent",
    "cone_contains",
    "coning",
    "decide",
    "derived_arrangement",
    "elementary_lift",
    "enumerate_circuits",
    "enumerate_derived_faces",
    "enumerate_faces",
    "face_count_report",
    "face_dimension",
    "face_operator",
    "face_operator_set",
    "face_poset",
    "fixed_point_check",
    "intersection_poset",
    "is_bounded",
    "is_empty",
    "locate_open_face",
    "normal_cone",
    "normal_fan_equal",
    "normally_equivalent_translations",
    "nullspace",
    "om_equivalent",
    "om_equivalent_up_to_symmetry",
    "open_interior_point",
    "optimize",
    "parallel_translation",
    "parse_rational",
    "rank",
    "relabel",
    "reorient",
    "rref",
    "same_open_face",
    "semilattice_equivalent",
    "sign_equivalent",
    "sign_of_point",
    "sign_operator",
    "sign_set",
    "solve_linear",
    "support_value",
    "transport_sign_coning",
    "transport_sign_lift",
    "valid_active_triple",
]
