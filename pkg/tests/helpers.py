"""Shared generators and independent oracles for the tests."""

import itertools
import random
from fractions import Fraction

from halfspace_lab.exactla import dot, rank, solve_linear
from halfspace_lab.feasibility import Constraint, MixedSystem, Rel

RELS = [Rel.EQ, Rel.LE, Rel.LT, Rel.GE, Rel.GT]


def small(rng):
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2)))


def random_system(rng: random.Random, max_n=3, max_rows=6) -> MixedSystem:
    n = rng.randint(1, max_n)
    rows = []
    for _ in range(rng.randint(1, max_rows)):
        normal = tuple(small(rng) for _ in range(n))
        rows.append(Constraint(normal, rng.choice(RELS), small(rng)))
    return MixedSystem(n, tuple(rows))


def fourier_motzkin(system: MixedSystem) -> bool:
    """Feasibility by eliminating variables one at a time (strictness propagates)."""
    # each row: (coeffs, rhs, strict) meaning coeffs . x < rhs (strict) or <= rhs
    rows = []
    for c in system.rows:
        v = list(c.normal)
        if c.rel in (Rel.LE, Rel.LT, Rel.EQ):
            rows.append((v, c.rhs, c.rel == Rel.LT))
        if c.rel in (Rel.GE, Rel.GT, Rel.EQ):
            rows.append(([-x for x in v], -c.rhs, c.rel == Rel.GT))
    for k in range(system.n):
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        rest = [r for r in rows if r[0][k] == 0]
        for (p, bp, sp), (q, bq, sq) in itertools.product(pos, neg):
            lp, lq = -q[k], p[k]
            rest.append(([lp * x + lq * y for x, y in zip(p, q)], lp * bp + lq * bq, sp or sq))
        rows = rest
    return all((b > 0) if s else (b >= 0) for _, b, s in rows)


def brute_force_lp_max(objective, system: MixedSystem):
    """Maximum over vertices of a pointed closed polyhedron, or None when there are none."""
    n = system.n
    best = None
    for rows in itertools.combinations(system.rows, n):
        M = [r.normal for r in rows]
        x = solve_linear(M, [r.rhs for r in rows])
        if x is None:
            continue

        if rank(M) < n or not system.satisfied_by(x):
            continue
        v = dot(objective, x)
        best = v if best is None or v > best else best
    return best
