"""Circuits of a vector configuration and the derived arrangement in offset space.

For rows ``u_1..u_m`` of ``U`` a circuit is a minimal dependent subset;
its circuit vector ``c`` (``c U = 0``, support exactly the circuit) is
stored in primitive integer form with a positive leading entry.  The
derived arrangement is the central arrangement ``<c, x> = 0`` in ``R^m``,
one hyperplane per circuit.  Its open faces partition the offset vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .arrangement import Arrangement, sign_of_point, sign_witnesses
from .errors import DeskScaleExceeded, DimensionMismatch, InconsistentInput
from .exactla import Matrix, Vector, is_zero, matrix, nullspace, primitive_integer, proportional, rank, vector, zeros

MAX_DERIVED_CIRCUITS = 12


@dataclass(frozen=True)
class Circuit:
    support: tuple
    vector: Vector


@dataclass(frozen=True)
class DerivedFaceRef:
    sign: tuple
    representative: Vector


@lru_cache(maxsize=1024)
def _circuits(U: Matrix) -> tuple:
    m = len(U)
    if any(is_zero(u) for u in U):
        raise InconsistentInput("circuits need nonzero rows")
    found = []
    top = rank(U) + 1
    for k in range(1, min(top, m) + 1):
        for C in combinations(range(m), k):
            Cs = set(C)
            if any(set(f.support) <= Cs for f in found):
                continue
            sub = [U[i] for i in C]
            if rank(sub) != k - 1:
                continue
            (y,) = nullspace(sub)
            full = [0] * m
            for i, yi in zip(C, y):
                full[i] = yi
            found.append(Circuit(C, primitive_integer(full)))
    return tuple(found)


def enumerate_circuits(U) -> list:
    """All circuits sorted by size, then support."""
    return list(_circuits(matrix(U)))


def derived_arrangement(U) -> Arrangement:
    U = matrix(U)
    m = len(U)
    rows = []
    for c in _circuits(U):
        if not any(proportional(c.vector, r) for r in rows):
            rows.append(c.vector)
    return Arrangement(tuple(rows), zeros(len(rows)), m)


def locate_open_face(U, a: Sequence) -> tuple:
    U, a = matrix(U), vector(a)
    if len(a) != len(U):
        raise DimensionMismatch(f"offset vector of length {len(a)} for {len(U)} rows")
    return sign_of_point(derived_arrangement(U), a)


def derived_face_dimension(U, s: Sequence[int]) -> int:
    """Dimension of the derived face with sign ``s``."""
    D = derived_arrangement(U)
    return D.n - rank([D.U[i] for i, v in enumerate(s) if v == 0])


def same_open_face(U, a: Sequence, b: Sequence) -> bool:
    return locate_open_face(U, a) == locate_open_face(U, b)


def in_closed_face(U, a: Sequence, b: Sequence) -> bool:
    """Whether ``b`` lies in the closure of the open face containing ``a``."""
    sa, sb = locate_open_face(U, a), locate_open_face(U, b)
    return all(y == 0 or y == x for x, y in zip(sa, sb))


def enumerate_derived_faces(U) -> list:
    U = matrix(U)
    D = derived_arrangement(U)
    if D.m > MAX_DERIVED_CIRCUITS:
        raise DeskScaleExceeded(f"{D.m} circuits exceed the limit of {MAX_DERIVED_CIRCUITS}")
    return [DerivedFaceRef(s, w) for s, w in sign_witnesses(D).items()]


def circuit_brute_force(U) -> list:
    """Oracle: minimal dependent subsets found by checking every subset."""
    U = matrix(U)
    m = len(U)
    dependent = [
        frozenset(C)
        for k in range(1, m + 1)
        for C in combinations(range(m), k)
        if rank([U[i] for i in C]) < k
    ]
    minimal = [C for C in dependent if not any(D < C for D in dependent)]
    return sorted((tuple(sorted(C)) for C in minimal), key=lambda C: (len(C), C))
