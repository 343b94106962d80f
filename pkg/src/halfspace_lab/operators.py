"""Sign and Face operators between unions of derived open faces and sign sets.

Subsets of offset space are represented only as unions of open faces of
the derived arrangement; a face is named by its derived sign vector.  The
sign set attached to an offset ``a`` can be that of the translation, the
coning or the lift (``kind``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .arrangement import sign_set
from .deformations import coning, elementary_lift, parallel_translation
from .derived import enumerate_derived_faces
from .errors import InconsistentInput
from .exactla import matrix

KINDS = ("translate", "cone", "lift")


def _arrangement_for(U, a, kind):
    if kind == "translate":
        return parallel_translation(U, a)
    if kind == "cone":
        return coning(U, a).cone
    if kind == "lift":
        return elementary_lift(U, a).lift
    raise InconsistentInput(f"unknown kind {kind!r}; expected one of {KINDS}")


@lru_cache(maxsize=64)
def _table(U, kind) -> dict:
    """Derived sign vector -> (representative, sign set), for every open face."""
    return {
        f.sign: (f.representative, sign_set(_arrangement_for(U, f.representative, kind)))
        for f in enumerate_derived_faces(U)
    }


def face_table(U, kind: str = "translate") -> dict:
    return _table(matrix(U), kind)


def all_faces(U, kind: str = "translate") -> frozenset:
    return frozenset(face_table(U, kind))


def _faces(U, S, kind):
    table = face_table(U, kind)
    S = frozenset(tuple(s) for s in S)
    unknown = S - set(table)
    if unknown:
        raise InconsistentInput(f"not open faces of the derived arrangement: {sorted(unknown)}")
    return table, S


def sign_operator(U, S: Iterable, kind: str = "translate") -> frozenset:
    table, S = _faces(U, S, kind)
    if not S:
        raise InconsistentInput("the face subset is empty")
    out = set()
    for f in S:
        out |= table[f][1]
    return frozenset(out)


def face_operator(U, s, kind: str = "translate") -> frozenset:
    s = tuple(s)
    return frozenset(f for f, (_, signs) in face_table(U, kind).items() if s in signs)


def face_operator_set(U, signs: Iterable, kind: str = "translate") -> frozenset:
    table = face_table(U, kind)
    out = set(table)
    for s in signs:
        s = tuple(s)
        out = {f for f in out if s in table[f][1]}
    return frozenset(out)


def fixed_point_check(U, S: Iterable, kind: str = "translate") -> bool:
    _, S = _faces(U, S, kind)
    if not S:
        raise InconsistentInput("the face subset is empty")
    return face_operator_set(U, sign_operator(U, S, kind), kind) == S
