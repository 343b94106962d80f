"""Tetrad polyhedra ``P(a, I, J, K)`` and their faces.

A tetrad splits the rows of ``U`` into equalities (``I``), upper bounds
(``J``) and lower bounds (``K``).  Indices are 0-based here; the JSON layer
converts to 1-based.

Faces are keyed by their active triple: the rows tight on the face, and
the remaining rows of ``J`` and ``K``.  A set ``S`` with ``I <= S`` is the
tight set of a nonempty face exactly when the open system (rows of ``S``
as equalities, the rest strict) is feasible, so face enumeration is a
search over such sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, EmptyPolyhedron, InconsistentInput, PointNotInPolyhedron
from .exactla import ZERO, Vector, dot, neg, rank, vector
from .feasibility import Constraint, MixedSystem, Optimal, Rel, Unbounded, decide, optimize


@dataclass(frozen=True)
class Tetrad:
    a: Vector
    I: frozenset
    J: frozenset
    K: frozenset

    def __post_init__(self):
        m = len(self.a)
        I, J, K = self.I, self.J, self.K
        if I & J or I & K or J & K:
            raise InconsistentInput("I, J, K must be pairwise disjoint")
        if I | J | K != frozenset(range(m)):
            raise InconsistentInput(f"I, J, K must partition the {m} row indices")

    @classmethod
    def of(cls, a: Iterable, I: Iterable = (), J: Optional[Iterable] = None, K: Iterable = ()):
        """Build a tetrad; ``J`` defaults to every index not in ``I`` or ``K``."""
        a = vector(a)
        I, K = frozenset(I), frozenset(K)
        if J is None:
            J = frozenset(range(len(a))) - I - K
        return cls(a, I, frozenset(J), K)

    @property
    def m(self) -> int:
        return len(self.a)

    def with_offset(self, b: Iterable) -> "Tetrad":
        return Tetrad(vector(b), self.I, self.J, self.K)


@dataclass(frozen=True, order=True)
class ActiveTriple:
    I: tuple
    J: tuple
    K: tuple

    @classmethod
    def of(cls, I, J, K) -> "ActiveTriple":
        return cls(tuple(sorted(I)), tuple(sorted(J)), tuple(sorted(K)))

    def sort_key(self):
        return (len(self.I), self.I, self.J, self.K)


@dataclass(frozen=True)
class Cone:
    n: int
    rays: tuple = ()
    lineality: tuple = ()

    def __post_init__(self):
        for g in self.rays + self.lineality:
            if len(g) != self.n:
                raise DimensionMismatch("cone generator has the wrong length")


@dataclass(frozen=True)
class FaceRecord:
    active: ActiveTriple
    dimension: int
    witness: Vector


def _ncols(U, n=None) -> int:
    if n is not None:
        return n
    if not U:
        raise DimensionMismatch("ambient dimension is unknown for an empty matrix; pass n")
    return len(U[0])


def _check(U, t: Tetrad, n=None) -> int:
    n = _ncols(U, n)
    if len(U) != t.m:
        raise DimensionMismatch(f"U has {len(U)} rows but the offset vector has length {t.m}")
    for row in U:
        if len(row) != n:
            raise DimensionMismatch("rows of U must have equal length")
    return n


def tetrad_system(U, t: Tetrad, tight=frozenset(), strict=False, n=None) -> MixedSystem:
    """The system of ``P`` with rows in ``tight`` forced to equality.

    With ``strict`` the remaining rows of ``J``/``K`` become strict.
    """
    n = _check(U, t, n)
    rows = []
    for i in range(t.m):
        u, ai = U[i], t.a[i]
        if i in t.I or i in tight:
            rel = Rel.EQ
        elif i in t.J:
            rel = Rel.LT if strict else Rel.LE
        else:
            rel = Rel.GT if strict else Rel.GE
        rows.append(Constraint(tuple(u), rel, ai))
    return MixedSystem(n, tuple(rows))


def is_empty(U, t: Tetrad, n=None) -> bool:
    return not decide(tetrad_system(U, t, n=n)).feasible


def open_interior_point(U, t: Tetrad, n=None) -> Optional[Vector]:
    """A point of the open polyhedron, or ``None`` when it is empty."""
    out = decide(tetrad_system(U, t, strict=True, n=n))
    return out.witness if out.feasible else None


def _require_nonempty(U, t, n):
    if is_empty(U, t, n):
        raise EmptyPolyhedron("the tetrad polyhedron is empty")


def recession_system(U, t: Tetrad, n=None) -> MixedSystem:
    n = _check(U, t, n)
    rows = []
    for i in range(t.m):
        rel = Rel.EQ if i in t.I else (Rel.LE if i in t.J else Rel.GE)
        rows.append(Constraint(tuple(U[i]), rel, ZERO))
    return MixedSystem(n, tuple(rows))


def is_bounded(U, t: Tetrad, n=None) -> bool:
    n = _check(U, t, n)
    _require_nonempty(U, t, n)
    box = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        box.append((e, "LE", 1))
        box.append((e, "GE", -1))
    system = recession_system(U, t, n) + MixedSystem.build(n, box)
    for j in range(n):
        e = vector(1 if k == j else 0 for k in range(n))
        for c in (e, neg(e)):
            res = optimize(c, system)
            if res.value != 0:
                return False
    return True


def support_value(U, t: Tetrad, direction: Sequence, n=None):
    """Supremum of ``<direction, x>`` over ``P``; ``math.inf`` when unbounded."""
    n = _check(U, t, n)
    d = vector(direction)
    if len(d) != n:
        raise DimensionMismatch("direction has the wrong length")
    res = optimize(d, tetrad_system(U, t, n=n))
    if isinstance(res, Optimal):
        return res.value
    if isinstance(res, Unbounded):
        return math.inf
    raise EmptyPolyhedron("the tetrad polyhedron is empty")


def contains(U, t: Tetrad, x: Sequence, n=None) -> bool:
    return tetrad_system(U, t, n=n).satisfied_by(vector(x))


def active_triple_at(U, t: Tetrad, x: Sequence, n=None) -> ActiveTriple:
    x = vector(x)
    if not contains(U, t, x, n):
        raise PointNotInPolyhedron("the point does not lie in the polyhedron")
    tight = {i for i in range(t.m) if dot(U[i], x) == t.a[i]}
    return ActiveTriple.of(tight, t.J - tight, t.K - tight)


def face_dimension(U, active: ActiveTriple, n=None) -> int:
    n = _ncols(U, n)
    return n - rank([U[i] for i in active.I])


def _face_record(U, t, tight, w, n) -> FaceRecord:
    active = ActiveTriple.of(t.I | tight, t.J - tight, t.K - tight)
    return FaceRecord(active, face_dimension(U, active, n), w)


def enumerate_faces(U, t: Tetrad, brute_force: bool = False, n=None) -> list:
    """All nonempty faces of ``P``, sorted by (size of tight set, tight set).

    The default search fixes the free rows one at a time as tight or strict
    and drops a branch once its partial system (undecided rows weak) is
    infeasible.  The witness of a node is reused for whichever child it
    already satisfies.  ``brute_force`` tests every candidate tight set.
    """
    n = _check(U, t, n)
    free = sorted(t.J | t.K)
    faces = []
    if brute_force:
        for k in range(len(free) + 1):
            for extra in combinations(free, k):
                tight = frozenset(extra)
                out = decide(tetrad_system(U, t, tight, strict=True, n=n))
                if out.feasible:
                    faces.append(_face_record(U, t, tight, out.witness, n))
        faces.sort(key=lambda f: f.active.sort_key())
        return faces

    def partial(tight, strict):
        rows = []
        for i in range(t.m):
            if i in t.I or i in tight:
                rel = Rel.EQ
            elif i in t.J:
                rel = Rel.LT if i in strict else Rel.LE
            else:
                rel = Rel.GT if i in strict else Rel.GE
            rows.append(Constraint(tuple(U[i]), rel, t.a[i]))
        return MixedSystem(n, tuple(rows))

    root = decide(partial(frozenset(), frozenset()))
    if not root.feasible:
        return []

    stack = [(0, frozenset(), frozenset(), root.witness)]
    while stack:
        depth, tight, strict, w = stack.pop()
        if depth == len(free):
            faces.append(_face_record(U, t, tight, w, n))
            continue
        i = free[depth]
        on = dot(U[i], w) == t.a[i]
        for make_tight in (True, False):
            nt = tight | {i} if make_tight else tight
            ns = strict if make_tight else strict | {i}
            if make_tight == on:
                stack.append((depth + 1, nt, ns, w))
                continue
            out = decide(partial(nt, ns))
            if out.feasible:
                stack.append((depth + 1, nt, ns, out.witness))
    faces.sort(key=lambda f: f.active.sort_key())
    return faces


def normal_cone(U, t: Tetrad, active: ActiveTriple, n=None) -> Cone:
    n = _ncols(U, n)
    tight = set(active.I)
    rays = [tuple(U[j]) for j in sorted(tight & t.J)]
    rays += [neg(U[k]) for k in sorted(tight & t.K)]
    lin = [tuple(U[i]) for i in sorted(t.I)]
    return Cone(n, tuple(rays), tuple(lin))


def cone_contains(c: Cone, v: Sequence) -> bool:
    v = vector(v)
    if len(v) != c.n:
        raise DimensionMismatch("vector and cone have different dimensions")
    gens = c.rays + c.lineality
    if not gens:
        return all(x == 0 for x in v)
    k = len(gens)
    rows = []
    for r in range(c.n):
        rows.append((tuple(g[r] for g in gens), "EQ", v[r]))
    for i in range(len(c.rays)):
        rows.append((tuple(1 if j == i else 0 for j in range(k)), "GE", 0))
    return decide(MixedSystem.build(k, rows)).feasible


def cone_subset(c1: Cone, c2: Cone) -> bool:
    if any(not cone_contains(c2, g) for g in c1.rays):
        return False
    return all(cone_contains(c2, g) and cone_contains(c2, neg(g)) for g in c1.lineality)


def cone_equal(c1: Cone, c2: Cone) -> bool:
    if c1.n != c2.n:
        return False
    if set(c1.rays) == set(c2.rays) and set(c1.lineality) == set(c2.lineality):
        return True
    return cone_subset(c1, c2) and cone_subset(c2, c1)


def normal_fan(U, t: Tetrad, n=None) -> list:
    return [normal_cone(U, t, f.active, n) for f in enumerate_faces(U, t, n=n)]


def _cone_span_rank(c: Cone) -> int:
    return rank(c.rays + c.lineality)


def fans_equal(fan1: list, fan2: list) -> bool:
    """Equality of two cone collections as sets of cones."""

    def covered(src, dst):
        buckets = {}
        for c in dst:
            buckets.setdefault(_cone_span_rank(c), []).append(c)
        return all(
            any(cone_equal(c, d) for d in buckets.get(_cone_span_rank(c), ())) for c in src
        )

    return covered(fan1, fan2) and covered(fan2, fan1)


def normal_fan_equal(U, t1: Tetrad, t2: Tetrad, n=None) -> bool:
    _require_nonempty(U, t1, n)
    _require_nonempty(U, t2, n)
    return fans_equal(normal_fan(U, t1, n), normal_fan(U, t2, n))


def _violations(con: Constraint):
    """Rows whose individual feasibility means ``con`` fails somewhere."""
    if con.rel is Rel.EQ:
        return [Constraint(con.normal, Rel.LT, con.rhs), Constraint(con.normal, Rel.GT, con.rhs)]
    if con.rel is Rel.LE:
        return [Constraint(con.normal, Rel.GT, con.rhs)]
    if con.rel is Rel.GE:
        return [Constraint(con.normal, Rel.LT, con.rhs)]
    if con.rel is Rel.LT:
        return [Constraint(con.normal, Rel.GE, con.rhs)]
    return [Constraint(con.normal, Rel.LE, con.rhs)]


def system_subset(s1: MixedSystem, s2: MixedSystem) -> bool:
    """Whether every solution of ``s1`` solves ``s2``."""
    for con in s2.rows:
        for bad in _violations(con):
            if decide(MixedSystem(s1.n, s1.rows + (bad,))).feasible:
                return False
    return True


def same_point_set(U, t1: Tetrad, t2: Tetrad, n=None) -> bool:
    s1, s2 = tetrad_system(U, t1, n=n), tetrad_system(U, t2, n=n)
    return system_subset(s1, s2) and system_subset(s2, s1)
