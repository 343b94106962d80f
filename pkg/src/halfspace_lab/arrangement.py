"""Affine hyperplane arrangements ``<u_i, x> = a_i`` and their sign vectors.

Indices are 0-based.  A face is identified with its sign vector; the
faces of an arrangement are found by a depth-first search over the rows
in which every node keeps a point of the relatively open cell cut out by
the signs fixed so far.  Children are usually produced from that point
directly (a small step along a suitable direction); a linear program is
needed only to ask whether the next hyperplane meets the current cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, InconsistentInput, MultiArrangementUnsupported, NotAFace
from .exactla import (
    Matrix,
    Vector,
    add,
    dot,
    is_zero,
    matrix,
    proportional,
    rank,
    right_nullspace,
    rref,
    scale,
    sign,
    solve_linear,
    sub,
    vector,
    zeros,
)
from .feasibility import Constraint, MixedSystem, Rel, decide
from .polyhedron import ActiveTriple
from .posets import Poset, isomorphic
from .signs import sign_leq, sort_signs


@dataclass(frozen=True)
class Arrangement:
    U: Matrix
    a: Vector
    n: int

    def __post_init__(self):
        if len(self.a) != len(self.U):
            raise DimensionMismatch(f"U has {len(self.U)} rows but a has length {len(self.a)}")
        for row in self.U:
            if len(row) != self.n:
                raise DimensionMismatch(f"row of length {len(row)} in an arrangement in dimension {self.n}")
            if is_zero(row):
                raise InconsistentInput("arrangement rows must be nonzero")

    @classmethod
    def of(cls, U: Iterable, a: Optional[Iterable] = None, n: Optional[int] = None) -> "Arrangement":
        U = matrix(U)
        if n is None:
            if not U:
                raise DimensionMismatch("pass n for an arrangement with no hyperplanes")
            n = len(U[0])
        a = zeros(len(U)) if a is None else vector(a)
        return cls(U, a, n)

    @property
    def m(self) -> int:
        return len(self.U)

    @property
    def is_multi(self) -> bool:
        m = self.m
        return any(proportional(self.U[i], self.U[j]) for i in range(m) for j in range(i + 1, m))

    @property
    def is_central(self) -> bool:
        return all(v == 0 for v in self.a)

    def distinct_hyperplanes(self) -> int:
        """Number of distinct hyperplanes as point sets."""
        reps = []
        for u, ai in zip(self.U, self.a):
            row = tuple(u) + (ai,)
            if not any(proportional(row, r) for r in reps):
                reps.append(row)
        return len(reps)


@dataclass(frozen=True)
class ArrangementFace:
    sign: tuple
    witness: Vector
    dimension: int


@dataclass(frozen=True, order=True)
class Flat:
    """A nonempty intersection of hyperplanes, keyed by the rows that contain it."""

    hyperplanes: tuple
    equations: tuple
    dimension: int


def sign_of_point(A: Arrangement, x: Sequence) -> tuple:
    x = vector(x)
    if len(x) != A.n:
        raise DimensionMismatch(f"point of length {len(x)} in dimension {A.n}")
    return tuple(sign(dot(u, x) - ai) for u, ai in zip(A.U, A.a))


_REL = {0: Rel.EQ, 1: Rel.GT, -1: Rel.LT}
_CLOSED = {0: Rel.EQ, 1: Rel.GE, -1: Rel.LE}


def cell_system(A: Arrangement, signs: Sequence[int], closed: bool = False) -> MixedSystem:
    """Rows ``sign(<u_i,x> - a_i) = s_i`` for the given prefix of signs."""
    rel = _CLOSED if closed else _REL
    rows = tuple(Constraint(tuple(A.U[i]), rel[s], A.a[i]) for i, s in enumerate(signs))
    return MixedSystem(A.n, rows)


def _step(A: Arrangement, prefix, p, d):
    """``p + eps*d`` with eps small enough to keep every nonzero prefix sign."""
    eps = None
    for r, s in enumerate(prefix):
        if s == 0:
            continue
        rate = dot(A.U[r], d)
        if rate == 0 or sign(rate) == s:
            continue
        slack = dot(A.U[r], p) - A.a[r]
        bound = -slack / rate
        if eps is None or bound < eps:
            eps = bound
    eps = 1 if eps is None else eps / 2
    return add(p, scale(eps, d))


def _sign_search(A: Arrangement) -> dict:
    out = {}
    # node: (prefix signs, point of the open cell, indices of zero signs)
    stack = [((), zeros(A.n), ())]
    while stack:
        prefix, w, E = stack.pop()
        i = len(prefix)
        if i == A.m:
            out[prefix] = w
            continue
        u, ai = A.U[i], A.a[i]
        v = sign(dot(u, w) - ai)
        UE = [A.U[k] for k in E]
        if rank(UE + [u]) == len(rref(UE, A.n)[1]):
            # u_i is constant on the cell's affine hull
            stack.append((prefix + (v,), w, E))
            continue
        if v == 0:
            d = next(b for b in right_nullspace(UE, A.n) if dot(u, b) != 0)
            stack.append((prefix + (0,), w, E + (i,)))
            for s in (1, -1):
                dd = d if sign(dot(u, d)) == s else scale(-1, d)
                stack.append((prefix + (s,), _step(A, prefix, w, dd), E))
            continue
        stack.append((prefix + (v,), w, E))
        res = decide(cell_system(A, prefix + (0,)))
        if res.feasible:
            p = res.witness
            stack.append((prefix + (0,), p, E + (i,)))
            stack.append((prefix + (-v,), _step(A, prefix, p, sub(p, w)), E))
    return out


@lru_cache(maxsize=4096)
def _faces_cached(A: Arrangement) -> tuple:
    found = _sign_search(A)
    for s, w in found.items():
        if sign_of_point(A, w) != s:
            raise AssertionError("sign search produced an inconsistent witness")
    return tuple((s, found[s]) for s in sort_signs(found))


def sign_witnesses(A: Arrangement) -> dict:
    """Map from every realized sign vector to a point of its face."""
    return dict(_faces_cached(A))


def sign_set(A: Arrangement) -> frozenset:
    return frozenset(s for s, _ in _faces_cached(A))


def sign_set_brute_force(A: Arrangement) -> frozenset:
    """Oracle: test all 3^m candidate sign vectors for strict feasibility."""
    return frozenset(
        s for s in product((-1, 0, 1), repeat=A.m) if decide(cell_system(A, s)).feasible
    )


def faces(A: Arrangement) -> list:
    out = []
    for s, w in _faces_cached(A):
        zero_rows = [A.U[i] for i, v in enumerate(s) if v == 0]
        out.append(ArrangementFace(s, w, A.n - rank(zero_rows)))
    return out


def _strictly_below(s, t) -> bool:
    return s != t and sign_leq(s, t)


def face_poset(A: Arrangement) -> Poset:
    return Poset.from_order(sort_signs(sign_set(A)), _strictly_below)


def flats(A: Arrangement) -> list:
    """All nonempty intersections of hyperplanes, the whole space included."""
    n = A.n
    aug = [tuple(u) + (ai,) for u, ai in zip(A.U, A.a)]

    def make(H):
        rows = [aug[i] for i in H]
        eqs, _ = rref(rows, n + 1)
        dim = n - rank([A.U[i] for i in H])
        return Flat(tuple(sorted(H)), eqs, dim)

    def containing(S):
        rows = [aug[i] for i in S]
        r = rank(rows)
        return frozenset(j for j in range(A.m) if rank(rows + [aug[j]]) == r)

    seen = {frozenset(): make(())}
    queue = [frozenset()]
    while queue:
        H = queue.pop()
        for i in range(A.m):
            if i in H:
                continue
            S = sorted(H | {i})
            if solve_linear([A.U[k] for k in S], [A.a[k] for k in S]) is None:
                continue
            H2 = containing(S)
            if H2 not in seen:
                seen[H2] = make(H2)
                queue.append(H2)
    return sorted(seen.values(), key=lambda f: (-f.dimension, f.hyperplanes))


def intersection_poset(A: Arrangement) -> Poset:
    def below(F, G):
        return F != G and set(F.hyperplanes) <= set(G.hyperplanes)

    return Poset.from_order(flats(A), below)


def _same_m(A, B):
    if A.m != B.m:
        raise DimensionMismatch(f"arrangements have {A.m} and {B.m} hyperplanes")


def sign_equivalent(A: Arrangement, B: Arrangement) -> bool:
    _same_m(A, B)
    return sign_set(A) == sign_set(B)


def combinatorially_equivalent(A: Arrangement, B: Arrangement) -> bool:
    return isomorphic(face_poset(A), face_poset(B))


def semilattice_equivalent(A: Arrangement, B: Arrangement) -> bool:
    return isomorphic(intersection_poset(A), intersection_poset(B))


def closure_system(A: Arrangement, s: Sequence[int]) -> MixedSystem:
    return cell_system(A, s, closed=True)


def valid_active_triple(A: Arrangement, face) -> ActiveTriple:
    """Tight rows of the face plus the other rows whose hyperplane meets its closure."""
    s = tuple(face.sign if isinstance(face, ArrangementFace) else face)
    if len(s) != A.m or s not in sign_set(A):
        raise NotAFace(f"{s} is not the sign vector of a face")
    closed = closure_system(A, s)
    tight, below, above = [], [], []
    for i, v in enumerate(s):
        if v == 0:
            tight.append(i)
            continue
        touch = MixedSystem(A.n, closed.rows + (Constraint(tuple(A.U[i]), Rel.EQ, A.a[i]),))
        if decide(touch).feasible:
            (below if v < 0 else above).append(i)
    return ActiveTriple.of(tight, below, above)


def valid_triples(A: Arrangement) -> dict:
    return {s: valid_active_triple(A, s) for s in sign_set(A)}


def normally_equivalent_translations(
    U, a: Sequence, b: Sequence, n: Optional[int] = None, allow_multi: bool = False
) -> bool:
    """Compare valid active triples of two translations and the order they induce.

    Proportional rows are rejected unless ``allow_multi`` is set; the
    comparison is still computed then, but it no longer has to agree with
    sign equivalence.
    """
    A, B = Arrangement.of(U, a, n), Arrangement.of(U, b, n)
    if A.is_multi and not allow_multi:
        raise MultiArrangementUnsupported("two rows of U are proportional")
    ta, tb = valid_triples(A), valid_triples(B)
    inv_b = {}
    for s, t in tb.items():
        inv_b.setdefault(t, []).append(s)
    if len(set(ta.values())) != len(ta) or any(len(v) > 1 for v in inv_b.values()):
        return False
    if set(ta.values()) != set(inv_b):
        return False
    phi = {s: inv_b[t][0] for s, t in ta.items()}
    signs = list(ta)
    for x in signs:
        for y in signs:
            if sign_leq(x, y) != sign_leq(phi[x], phi[y]):
                return False
    return True


def reorient(A: Arrangement, S: Iterable[int]) -> Arrangement:
    S = set(S)
    U = tuple(tuple(-x for x in u) if i in S else u for i, u in enumerate(A.U))
    a = tuple(-x if i in S else x for i, x in enumerate(A.a))
    return Arrangement(U, a, A.n)


def relabel(A: Arrangement, perm: Sequence[int]) -> Arrangement:
    """Row ``k`` of the result is row ``perm[k]`` of ``A``."""
    if sorted(perm) != list(range(A.m)):
        raise InconsistentInput("relabeling must be a permutation of the row indices")
    return Arrangement(tuple(A.U[p] for p in perm), tuple(A.a[p] for p in perm), A.n)
