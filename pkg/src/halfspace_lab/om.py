"""Covector systems: axiom checks, affine restriction and symmetry search.

A covector system is a finite set of sign vectors on a ground set of size
``m``.  The axioms checked, in this order, are: the zero vector is present;
the set is closed under negation; it is closed under composition; and
vector elimination holds for every separating element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Union

from .errors import DeskScaleExceeded, DimensionMismatch, LoopElement
from .signs import compose, negate, separation, sort_signs

MAX_SYMMETRY_GROUND = 8

AXIOMS = ("zero", "symmetry", "composition", "elimination")


@dataclass(frozen=True)
class CovectorSystem:
    m: int
    covectors: frozenset

    @classmethod
    def of(cls, covectors: Iterable, m: Optional[int] = None) -> "CovectorSystem":
        cov = frozenset(tuple(x) for x in covectors)
        if m is None:
            if not cov:
                raise DimensionMismatch("pass m for an empty covector system")
            m = len(next(iter(cov)))
        if any(len(x) != m for x in cov):
            raise DimensionMismatch("covectors have inconsistent lengths")
        return cls(m, cov)

    def __len__(self):
        return len(self.covectors)

    def __contains__(self, x):
        return tuple(x) in self.covectors

    def sorted(self) -> list:
        return sort_signs(self.covectors)


@dataclass(frozen=True)
class Ok:
    ok = True


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: tuple
    ok = False


def _elimination_ok(L: frozenset, X, Y, e, sep) -> bool:
    target = compose(X, Y)
    others = [f for f in sep if f != e]
    base = list(target)
    base[e] = 0
    if 3 ** len(others) <= len(L):
        for choice in product((-1, 0, 1), repeat=len(others)):
            Z = list(base)
            for f, v in zip(others, choice):
                Z[f] = v
            if tuple(Z) in L:
                return True
        return False
    free = set(others)
    return any(
        Z[e] == 0 and all(Z[f] == base[f] for f in range(len(Z)) if f != e and f not in free)
        for Z in L
    )


def check_covector_axioms(L: CovectorSystem) -> Union[Ok, Violation]:
    cov = L.covectors
    order = L.sorted()
    zero = (0,) * L.m
    if zero not in cov:
        return Violation("zero", (zero,))
    for X in order:
        if negate(X) not in cov:
            return Violation("symmetry", (X,))
    for X in order:
        for Y in order:
            if compose(X, Y) not in cov:
                return Violation("composition", (X, Y))
    for X in order:
        for Y in order:
            sep = separation(X, Y)
            for e in sep:
                if not _elimination_ok(cov, X, Y, e, sep):
                    return Violation("elimination", (X, Y, e))
    return Ok()


def affine_covectors(L: CovectorSystem, g: int) -> CovectorSystem:
    """Covectors with a ``+`` at ``g``, with coordinate ``g`` removed."""
    if not 0 <= g < L.m:
        raise DimensionMismatch(f"element {g} outside a ground set of size {L.m}")
    if all(X[g] == 0 for X in L.covectors):
        raise LoopElement(f"element {g} is a loop")
    out = frozenset(X[:g] + X[g + 1 :] for X in L.covectors if X[g] == 1)
    return CovectorSystem(L.m - 1, out)


def om_equivalent(L1: CovectorSystem, L2: CovectorSystem) -> bool:
    if L1.m != L2.m:
        raise DimensionMismatch(f"ground sets of size {L1.m} and {L2.m}")
    return L1.covectors == L2.covectors


def reorient_covectors(L: CovectorSystem, S: Iterable[int]) -> CovectorSystem:
    S = set(S)
    return CovectorSystem(
        L.m, frozenset(tuple(-v if i in S else v for i, v in enumerate(X)) for X in L.covectors)
    )


def relabel_covectors(L: CovectorSystem, perm) -> CovectorSystem:
    """Coordinate ``i`` of each new covector is coordinate ``perm[i]`` of the old one."""
    return CovectorSystem(L.m, frozenset(tuple(X[p] for p in perm) for X in L.covectors))


def apply_symmetry(L: CovectorSystem, perm, S) -> CovectorSystem:
    return reorient_covectors(relabel_covectors(L, perm), S)


@dataclass(frozen=True)
class SymmetryWitness:
    perm: tuple
    reoriented: frozenset


def om_equivalent_up_to_symmetry(
    L1: CovectorSystem, L2: CovectorSystem, relabel_only: bool = False, all_witnesses: bool = False
):
    """Search for ``(perm, S)`` with ``apply_symmetry(L2, perm, S) == L1``.

    Positions are assigned left to right, trying source coordinates in
    increasing order and the unflipped orientation before the flipped one;
    a partial assignment survives only while the projections of both
    systems onto the assigned positions agree.  Returns the first witness,
    ``None`` when there is none, or the list of all witnesses when
    ``all_witnesses`` is set.
    """
    if L1.m != L2.m:
        raise DimensionMismatch(f"ground sets of size {L1.m} and {L2.m}")
    m = L1.m
    if m > MAX_SYMMETRY_GROUND:
        raise DeskScaleExceeded(f"ground set of size {m} exceeds {MAX_SYMMETRY_GROUND}")
    found = []
    if len(L1) != len(L2):
        return [] if all_witnesses else None
    flips = (1,) if relabel_only else (1, -1)

    def support_profile(L, i):
        return (sum(1 for X in L.covectors if X[i] == 0), sum(1 for X in L.covectors if X[i] == 1))

    prof1 = [support_profile(L1, i) for i in range(m)]
    prof2 = [support_profile(L2, i) for i in range(m)]

    def compatible(i, j, f):
        z1, p1 = prof1[i]
        z2, p2 = prof2[j]
        if z1 != z2:
            return False
        pos2 = p2 if f == 1 else len(L2) - z2 - p2
        return p1 == pos2

    def search(perm, signs, proj1_cache):
        k = len(perm)
        if k == m:
            found.append(SymmetryWitness(tuple(perm), frozenset(i for i, s in enumerate(signs) if s == -1)))
            return not all_witnesses
        target = proj1_cache[k + 1]
        for j in range(m):
            if j in perm:
                continue
            for f in flips:
                if not compatible(k, j, f):
                    continue
                p = perm + [j]
                s = signs + [f]
                proj2 = frozenset(tuple(X[p[t]] * s[t] for t in range(k + 1)) for X in L2.covectors)
                if proj2 != target:
                    continue
                if search(p, s, proj1_cache):
                    return True
        return False

    proj1 = [frozenset(X[:k] for X in L1.covectors) for k in range(m + 1)]
    search([], [], proj1)
    if all_witnesses:
        return found
    return found[0] if found else None
