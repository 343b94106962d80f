"""Seeded random instances for the property suites.

Rationals have numerators in [-4, 4] and denominators in {1, 2, 3}, which
makes zeros, parallel rows and concurrent hyperplanes common.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import Optional

from .derived import enumerate_derived_faces, locate_open_face
from .exactla import add, is_zero, mat_vec, proportional, scale, vector
from .polyhedron import Tetrad

SEED_ENV = "HALFSPACE_LAB_SEED"


def resolve_seed(seed: Optional[int]) -> int:
    """The environment variable wins over an explicit seed."""
    env = os.environ.get(SEED_ENV)
    if env not in (None, ""):
        return int(env)
    return 0 if seed is None else int(seed)


def rng_for(seed: Optional[int]) -> random.Random:
    return random.Random(resolve_seed(seed))


def rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3)))


def positive_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 4), rng.choice((1, 2, 3)))


def rvector(rng, k: int) -> tuple:
    return tuple(rational(rng) for _ in range(k))


def rmatrix(rng, m: int, n: int, non_multi: bool = False) -> tuple:
    rows = []
    while len(rows) < m:
        u = rvector(rng, n)
        if is_zero(u):
            continue
        if non_multi and any(proportional(u, r) for r in rows):
            continue
        rows.append(u)
    return tuple(rows)


def instance(rng, max_n: int = 3, max_m: int = 5, min_m: int = 1, non_multi: bool = False):
    """A random ``(U, n)`` with ``n <= max_n`` and ``min_m <= m <= max_m``."""
    n = rng.randint(1, max_n)
    if non_multi:
        # a non-multi configuration in dimension 1 has a single row
        max_m = min(max_m, 1) if n == 1 else max_m
        min_m = min(min_m, max_m)
    m = rng.randint(min_m, max_m)
    return rmatrix(rng, m, n, non_multi), n


def point_near(rng, U, a, target_sign=None) -> tuple:
    """Another offset in the open derived face of ``a``.

    A random perturbation is shrunk until it stays in the face, then the
    result is scaled by a positive factor and moved by ``U w``; neither
    step changes the derived sign vector.
    """
    m = len(U)
    n = len(U[0]) if U else 0
    sign_a = locate_open_face(U, a) if target_sign is None else target_sign
    r = rvector(rng, m)
    t = Fraction(1)
    b = a
    for _ in range(12):
        cand = add(a, scale(t, r))
        if locate_open_face(U, cand) == sign_a:
            b = cand
            break
        t /= 2
    b = add(scale(positive_rational(rng), b), mat_vec(U, rvector(rng, n)))
    return b


def same_face_pair(rng, U) -> tuple:
    """Two offsets in one open derived face chosen uniformly among the faces."""
    faces = enumerate_derived_faces(U)
    face = rng.choice(faces)
    a = point_near(rng, U, face.representative, face.sign)
    b = point_near(rng, U, face.representative, face.sign)
    return a, b


def offset_pair(rng, U) -> tuple:
    """Half the time two points of one face, otherwise two independent offsets."""
    a = rvector(rng, len(U))
    if rng.random() < 0.5:
        return a, point_near(rng, U, a)
    return a, rvector(rng, len(U))


def partition(rng, m: int) -> tuple:
    roles = [rng.choice("IJJKK") for _ in range(m)]
    I = frozenset(i for i, r in enumerate(roles) if r == "I")
    J = frozenset(i for i, r in enumerate(roles) if r == "J")
    K = frozenset(i for i, r in enumerate(roles) if r == "K")
    return I, J, K


def tetrad(a, parts) -> Tetrad:
    I, J, K = parts
    return Tetrad(vector(a), I, J, K)


def point_in_cone(rng, U, parts) -> tuple:
    """An offset ``a`` with ``P(a, I, J, K)`` nonempty: ``a = U x + slack``."""
    I, J, K = parts
    n = len(U[0])
    x = rvector(rng, n)
    base = mat_vec(U, x)
    out = []
    for i, v in enumerate(base):
        if i in J:
            v = v + abs(rational(rng))
        elif i in K:
            v = v - abs(rational(rng))
        out.append(v)
    return tuple(out)
