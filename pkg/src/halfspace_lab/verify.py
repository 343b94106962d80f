"""Seeded property suites.

Each suite draws random instances, checks one family of claims exactly and
returns a :class:`SuiteReport` listing every violation with enough data to
reproduce it.  Offsets and matrices in reports are JSON-ready.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from . import sampling
from .arrangement import (
    Arrangement,
    combinatorially_equivalent,
    normally_equivalent_translations,
    relabel,
    reorient,
    semilattice_equivalent,
    sign_equivalent,
    sign_set,
)
from .deformations import coning, elementary_lift, face_count_report, parallel_translation
from .derived import derived_arrangement, same_open_face
from .exactla import add, matrix, scale, sub
from .jsonio import mat, vec
from .om import CovectorSystem, apply_symmetry, check_covector_axioms, om_equivalent_up_to_symmetry
from .operators import all_faces, face_table, fixed_point_check
from .polyhedron import enumerate_faces, is_bounded, is_empty, normal_fan_equal
from .signs import compose, negate

U_EX = matrix([(-1, 0), (0, 1), (0, -1), (1, 1)])


@dataclass
class SuiteReport:
    name: str
    trials: int = 0
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "checked": self.checked,
            "violations": self.violations,
            "ok": self.ok,
            **({"notes": self.notes} if self.notes else {}),
        }


def _instance(rng, U, n, **kw):
    if U is not None:
        return matrix(U), (n if n is not None else len(U[0]))
    return sampling.instance(rng, **kw)


def _tri(U, a, b):
    return (
        (parallel_translation(U, a), parallel_translation(U, b)),
        (coning(U, a).cone, coning(U, b).cone),
        (elementary_lift(U, a).lift, elementary_lift(U, b).lift),
    )


def thm1_4(trials: int = 100, seed: int = 0, U=None, n=None, pairs: Optional[list] = None) -> SuiteReport:
    """Same open derived face iff sign equivalent translations, conings, lifts."""
    rng = random.Random(seed)
    rep = SuiteReport("thm1_4", trials)
    for _ in range(trials):
        UU, nn = _instance(rng, U, n)
        a, b = sampling.offset_pair(rng, UU)
        same = same_open_face(UU, a, b)
        flags = [sign_equivalent(A, B) for A, B in _tri(UU, a, b)]
        if pairs is not None:
            pairs.extend(_tri(UU, a, b))
        rep.checked += 1
        if not (same == flags[0] == flags[1] == flags[2]):
            rep.violations.append(
                {
                    "U": mat(UU),
                    "a": vec(a),
                    "b": vec(b),
                    "same_open_face": same,
                    "translate": flags[0],
                    "cone": flags[1],
                    "lift": flags[2],
                }
            )
    return rep


def _tetrad_sample(rng, U, n):
    UU, nn = _instance(rng, U, n)
    a, b = sampling.same_face_pair(rng, UU)
    parts = sampling.partition(rng, len(UU))
    return UU, nn, a, b, parts


def thm1_2(trials: int = 50, seed: int = 0, U=None, n=None, pairs: Optional[list] = None) -> SuiteReport:
    """Offsets in one open derived face give equal active triples and normal fans."""
    rng = random.Random(seed)
    rep = SuiteReport("thm1_2", trials)
    both_empty = 0
    for _ in range(trials):
        UU, nn, a, b, parts = _tetrad_sample(rng, U, n)
        if pairs is not None:
            pairs.append((parallel_translation(UU, a), parallel_translation(UU, b)))
        ta, tb = sampling.tetrad(a, parts), sampling.tetrad(b, parts)
        ea, eb = is_empty(UU, ta, nn), is_empty(UU, tb, nn)
        rep.checked += 1
        info = {"U": mat(UU), "a": vec(a), "b": vec(b), "I": sorted(i + 1 for i in parts[0]),
                "J": sorted(i + 1 for i in parts[1]), "K": sorted(i + 1 for i in parts[2])}
        if ea and eb:
            both_empty += 1
            continue
        if ea != eb:
            rep.violations.append({**info, "reason": "exactly one polyhedron is empty"})
            continue
        fa = {f.active for f in enumerate_faces(UU, ta, n=nn)}
        fb = {f.active for f in enumerate_faces(UU, tb, n=nn)}
        if fa != fb:
            rep.violations.append({**info, "reason": "active triples differ"})
        elif not normal_fan_equal(UU, ta, tb, nn):
            rep.violations.append({**info, "reason": "normal fans differ"})
    rep.notes["both_empty"] = both_empty
    return rep


def thm3_6(trials: int = 50, seed: int = 0, U=None, n=None, sweep: int = 10) -> SuiteReport:
    """Boundedness is shared across a derived face and constant on each cone C(I,J,K)."""
    rng = random.Random(seed)
    rep = SuiteReport("thm3_6", trials)
    for _ in range(trials):
        UU, nn, a, b, parts = _tetrad_sample(rng, U, n)
        ta, tb = sampling.tetrad(a, parts), sampling.tetrad(b, parts)
        if not is_empty(UU, ta, nn) and not is_empty(UU, tb, nn):
            rep.checked += 1
            if is_bounded(UU, ta, nn) != is_bounded(UU, tb, nn):
                rep.violations.append({"U": mat(UU), "a": vec(a), "b": vec(b), "reason": "face pair"})
        p0 = sampling.point_in_cone(rng, UU, parts)
        p1 = sampling.point_in_cone(rng, UU, parts)
        flags = []
        for k in range(sweep):
            p = add(p0, scale(Fraction(k, max(sweep - 1, 1)), sub(p1, p0)))
            t = sampling.tetrad(p, parts)
            if is_empty(UU, t, nn):
                rep.violations.append({"U": mat(UU), "a": vec(p), "reason": "sweep point outside the cone"})
                break
            flags.append(is_bounded(UU, t, nn))
        rep.checked += 1
        if len(set(flags)) > 1:
            rep.violations.append({"U": mat(UU), "from": vec(p0), "to": vec(p1), "reason": "sweep", "flags": flags})
    return rep


def thm1_3(trials: int = 30, seed: int = 0, U=None, n=None) -> SuiteReport:
    """Offsets in one open derived face: combinatorial equivalence of all three deformations."""
    rng = random.Random(seed)
    rep = SuiteReport("thm1_3", trials)
    for _ in range(trials):
        UU, nn = _instance(rng, U, n)
        a, b = sampling.same_face_pair(rng, UU)
        names = ("translate", "cone", "lift")
        for name, (A, B) in zip(names, _tri(UU, a, b)):
            rep.checked += 1
            if not combinatorially_equivalent(A, B):
                rep.violations.append({"U": mat(UU), "a": vec(a), "b": vec(b), "kind": name})
        if not Arrangement.of(UU, None, nn).is_multi:
            rep.checked += 1
            if not normally_equivalent_translations(UU, a, b, nn):
                rep.violations.append({"U": mat(UU), "a": vec(a), "b": vec(b), "kind": "normal"})
    return rep


def thm4_8(trials: int = 30, seed: int = 0, U=None, n=None) -> SuiteReport:
    """A relabelled, reoriented copy of a translation in the same face is found by the symmetry search."""
    rng = random.Random(seed)
    rep = SuiteReport("thm4_8", trials)
    for _ in range(trials):
        UU, nn = _instance(rng, U, n, max_m=4)
        a, b = sampling.same_face_pair(rng, UU)
        m = len(UU)
        perm = list(range(m))
        rng.shuffle(perm)
        S = [i for i in range(m) if rng.random() < 0.5]
        B = reorient(relabel(parallel_translation(UU, b), perm), S)
        L1 = CovectorSystem.of(sign_set(parallel_translation(UU, a)), m)
        L2 = CovectorSystem.of(sign_set(B), m)
        w = om_equivalent_up_to_symmetry(L1, L2)
        rep.checked += 1
        if w is None or apply_symmetry(L2, w.perm, w.reoriented) != L1:
            rep.violations.append({"U": mat(UU), "a": vec(a), "b": vec(b), "perm": [p + 1 for p in perm],
                                   "S": [s + 1 for s in S]})
    return rep


def thm6_2(U=None, samples: int = 10, seed: int = 0, kind: str = "translate") -> SuiteReport:
    """Fixed points of Face o Sign are exactly the single open faces; sign sets are pairwise incomparable."""
    rng = random.Random(seed)
    UU = U_EX if U is None else matrix(U)
    rep = SuiteReport("thm6_2", samples)
    faces = sorted(all_faces(UU, kind))
    table = face_table(UU, kind)
    for f in faces:
        rep.checked += 1
        if not fixed_point_check(UU, [f], kind):
            rep.violations.append({"faces": [list(f)], "expected": True})
    if len(faces) >= 2:
        seen = set()
        for _ in range(samples):
            k = rng.randint(2, len(faces))
            S = frozenset(rng.sample(faces, k))
            seen.add(S)
            rep.checked += 1
            if fixed_point_check(UU, S, kind):
                rep.violations.append({"faces": sorted(list(f) for f in S), "expected": False})
        rep.notes["distinct_unions"] = len(seen)
    for f, g in combinations(faces, 2):
        rep.checked += 1
        sf, sg = table[f][1], table[g][1]
        if sf <= sg or sg <= sf:
            rep.violations.append({"faces": [list(f), list(g)], "reason": "comparable sign sets"})
    return rep


def composition_mutation(L: CovectorSystem) -> CovectorSystem:
    """Remove some ``Z = X o Y`` (and ``-Z``) with ``X, Y`` kept."""
    order = L.sorted()
    for X in order:
        for Y in order:
            Z = compose(X, Y)
            if Z in (X, Y, negate(X), negate(Y)) or not any(Z):
                continue
            return CovectorSystem(L.m, L.covectors - {Z, negate(Z)})
    raise ValueError("no composition to drop")


def axioms(trials: int = 20, seed: int = 0, U=None, n=None) -> SuiteReport:
    """Covector axioms for conings, lifts and derived arrangements, plus three mutations."""
    rng = random.Random(seed)
    rep = SuiteReport("axioms", trials)

    def check(label, A, extra):
        L = CovectorSystem.of(sign_set(A), A.m)
        res = check_covector_axioms(L)
        rep.checked += 1
        if not res.ok:
            rep.violations.append({"system": label, "axiom": res.axiom, **extra})

    check("derived", derived_arrangement(U_EX), {"U": mat(U_EX)})
    for _ in range(trials):
        UU, nn = _instance(rng, U, n)
        a = sampling.rvector(rng, len(UU))
        info = {"U": mat(UU), "a": vec(a)}
        check("cone", coning(UU, a, nn).cone, info)
        check("lift", elementary_lift(UU, a, nn).lift, info)
        check("derived", derived_arrangement(UU), info)
    base = CovectorSystem.of(sign_set(coning([(1,), (1,)], (0, 1)).cone))
    mutations = {
        "zero": CovectorSystem(base.m, base.covectors - {(0,) * base.m}),
        "symmetry": CovectorSystem(base.m, base.covectors - {base.sorted()[-1]}),
        "composition": composition_mutation(base),
    }
    for expected, L in mutations.items():
        res = check_covector_axioms(L)
        rep.checked += 1
        if res.ok or res.axiom != expected:
            rep.violations.append({"mutation": expected, "got": "ok" if res.ok else res.axiom})
    return rep


def chain(pairs: list) -> SuiteReport:
    """sign => combinatorial => semilattice equivalence on the given arrangement pairs."""
    rep = SuiteReport("chain", len(pairs))
    for A, B in pairs:
        rep.checked += 1
        s = sign_equivalent(A, B)
        c = combinatorially_equivalent(A, B) if s else None
        if s and not c:
            rep.violations.append({"A": mat(A.U), "a": vec(A.a), "B": mat(B.U), "b": vec(B.a), "fails": "sign=>comb"})
            continue
        if c and not semilattice_equivalent(A, B):
            rep.violations.append({"A": mat(A.U), "a": vec(A.a), "B": mat(B.U), "b": vec(B.a), "fails": "comb=>semilattice"})
    return rep


def cor4_7(trials: int = 30, seed: int = 0, U=None, n=None) -> SuiteReport:
    """For non-multi configurations, normal equivalence of translations equals sign equivalence."""
    rng = random.Random(seed)
    rep = SuiteReport("cor4_7", trials)
    agree_true = 0
    for _ in range(trials):
        UU, nn = _instance(rng, U, n, non_multi=True)
        a, b = sampling.offset_pair(rng, UU)
        ne = normally_equivalent_translations(UU, a, b, nn)
        se = sign_equivalent(parallel_translation(UU, a, nn), parallel_translation(UU, b, nn))
        rep.checked += 1
        agree_true += ne and se
        if ne != se:
            rep.violations.append({"U": mat(UU), "a": vec(a), "b": vec(b), "normal": ne, "sign": se})
    rep.notes["both_true"] = agree_true
    return rep


def counts(trials: int = 20, seed: int = 0, U=None, n=None) -> SuiteReport:
    """Face-count identities of coning and lift on instances with two or more distinct hyperplanes."""
    rng = random.Random(seed)
    rep = SuiteReport("counts", trials)
    general = 0
    for _ in range(trials):
        while True:
            UU, nn = _instance(rng, U, n, min_m=2)
            a = sampling.rvector(rng, len(UU))
            r = face_count_report(UU, a, nn)
            if r.identities_hold is not None:
                break
        rep.checked += 1
        general += r.general_identity_holds
        if not r.identities_hold:
            rep.violations.append({"U": mat(UU), "a": vec(a), **r.as_dict()})
    rep.notes["general_identity_holds"] = general
    return rep


SUITES: dict = {
    "thm1_2": thm1_2,
    "thm1_3": thm1_3,
    "thm1_4": thm1_4,
    "thm3_6": thm3_6,
    "thm4_8": thm4_8,
    "thm6_2": thm6_2,
    "axioms": axioms,
    "cor4_7": cor4_7,
    "counts": counts,
}


def run_suite(name: str, trials: Optional[int] = None, seed: int = 0, U=None, n=None) -> SuiteReport:
    fn: Callable = SUITES[name]
    if name == "thm6_2":
        return fn(U=U, samples=trials or 10, seed=seed)
    kwargs = {"seed": seed, "U": U, "n": n}
    if trials is not None:
        kwargs["trials"] = trials
    return fn(**kwargs)
