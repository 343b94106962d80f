"""Parallel translation, coning and elementary lift of a linear arrangement.

The coning of ``<u_i, x> = a_i`` lives in ``R^(n+1)`` with rows
``(u_i, a_i)`` through the origin plus the extra hyperplane ``x_(n+1) = 0``,
which is always the last row (index ``m`` here, ``m+1`` in 1-based I/O).
The lift is the coning without that last row.

The extra hyperplane is oriented by the row ``(0, ..., 0, -1)``.  On the
slice ``x_(n+1) = -1`` the row ``(u_i, a_i)`` evaluates to ``<u_i, x> - a_i``,
so the faces on the positive side of the extra hyperplane carry exactly the
signs of the translation.

Sign sets of the coning can be obtained two ways: geometrically, or by
transport from the sign set of the translation.  Faces of the coning above
the extra hyperplane are ``(s, +)`` for the signs ``s`` of the translation,
those below are their negatives, and the faces inside it are ``(t, 0)`` for
the signs ``t`` of the underlying linear arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .arrangement import Arrangement, sign_set
from .errors import DimensionMismatch, InconsistentInput
from .exactla import ONE, matrix, vector, zeros
from .signs import compose, negate


@dataclass(frozen=True)
class ConedArrangement:
    base: Arrangement
    cone: Arrangement


@dataclass(frozen=True)
class LiftedArrangement:
    base: Arrangement
    lift: Arrangement


def _inputs(U, a, n):
    U = matrix(U)
    if n is None:
        if not U:
            raise DimensionMismatch("pass n when U has no rows")
        n = len(U[0])
    a = vector(a)
    if len(a) != len(U):
        raise DimensionMismatch(f"U has {len(U)} rows but a has length {len(a)}")
    return U, a, n


def parallel_translation(U, a, n: Optional[int] = None) -> Arrangement:
    U, a, n = _inputs(U, a, n)
    return Arrangement(U, a, n)


def linear_part(U, n: Optional[int] = None) -> Arrangement:
    U = matrix(U)
    n = len(U[0]) if n is None else n
    return Arrangement(U, zeros(len(U)), n)


def coning(U, a, n: Optional[int] = None) -> ConedArrangement:
    U, a, n = _inputs(U, a, n)
    rows = tuple(tuple(u) + (ai,) for u, ai in zip(U, a))
    rows += (zeros(n) + (-ONE,),)
    return ConedArrangement(Arrangement(U, a, n), Arrangement(rows, zeros(len(rows)), n + 1))


def elementary_lift(U, a, n: Optional[int] = None) -> LiftedArrangement:
    c = coning(U, a, n)
    cone = c.cone
    return LiftedArrangement(c.base, Arrangement(cone.U[:-1], cone.a[:-1], cone.n))


def _validate_affine_signs(signs: frozenset) -> int:
    if not signs:
        raise InconsistentInput("a sign set is never empty")
    lengths = {len(s) for s in signs}
    if len(lengths) != 1:
        raise InconsistentInput("sign vectors have different lengths")
    (m,) = lengths
    for x in signs:
        if any(v not in (-1, 0, 1) for v in x):
            raise InconsistentInput(f"bad sign entry in {x}")
    if not any(all(v != 0 for v in x) for x in signs):
        raise InconsistentInput("no region sign vector is present")
    for x in signs:
        for y in signs:
            if compose(x, y) not in signs:
                raise InconsistentInput(f"not closed under composition: {x} o {y}")
    return m


def transport_sign_coning(signs: Iterable, U, n: Optional[int] = None) -> frozenset:
    """Sign set of the coning, built from the sign set of the translation.

    The faces inside the extra hyperplane are those of the linear
    arrangement ``<u_i, x> = 0``, so ``U`` is needed for that slice.
    """
    signs = frozenset(tuple(s) for s in signs)
    m = _validate_affine_signs(signs)
    U = matrix(U)
    if len(U) != m:
        raise DimensionMismatch(f"sign vectors have length {m} but U has {len(U)} rows")
    if m == 0:
        return frozenset({(1,), (0,), (-1,)})
    direction = sign_set(linear_part(U, n))
    out = {tuple(s) + (1,) for s in signs}
    out |= {negate(s) + (-1,) for s in signs}
    out |= {tuple(t) + (0,) for t in direction}
    return frozenset(out)


def transport_sign_lift(cone_signs: Iterable) -> frozenset:
    return frozenset(tuple(s)[:-1] for s in cone_signs)


@dataclass(frozen=True)
class FaceCountReport:
    fA: int
    fCone: int
    fLift: int
    f_direction: int
    distinct_hyperplanes: int
    identities_hold: Optional[bool]
    general_identity_holds: bool

    def as_dict(self) -> dict:
        return {
            "fA": self.fA,
            "fCone": self.fCone,
            "fLift": self.fLift,
            "f_direction": self.f_direction,
            "distinct_hyperplanes": self.distinct_hyperplanes,
            "identities_hold": self.identities_hold,
            "general_identity_holds": self.general_identity_holds,
        }


def face_count_report(U, a, n: Optional[int] = None) -> FaceCountReport:
    """Face counts of the translation, its coning and its lift.

    ``identities_hold`` tests ``fCone = 2 fA + 3`` and ``fLift = 2 fA - 1``
    and is ``None`` when the translation has fewer than two distinct
    hyperplanes.  ``general_identity_holds`` tests
    ``fCone = 2 fA + f_direction``, where ``f_direction`` counts faces of
    the linear arrangement.
    """
    A = parallel_translation(U, a, n)
    fA = len(sign_set(A))
    fCone = len(sign_set(coning(U, a, n).cone))
    fLift = len(sign_set(elementary_lift(U, a, n).lift))
    fDir = len(sign_set(linear_part(A.U, A.n)))
    distinct = A.distinct_hyperplanes()
    ident = None
    if distinct >= 2:
        ident = fCone == 2 * fA + 3 and fLift == 2 * fA - 1
    return FaceCountReport(fA, fCone, fLift, fDir, distinct, ident, fCone == 2 * fA + fDir)
