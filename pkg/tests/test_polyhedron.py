import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfspace_lab import sampling
from halfspace_lab.errors import DimensionMismatch, EmptyPolyhedron, InconsistentInput, PointNotInPolyhedron
from halfspace_lab.exactla import matrix, rank, sub, vector
from halfspace_lab.feasibility import Constraint, MixedSystem, Optimal, Rel, optimize
from halfspace_lab.posets import Poset, isomorphic
from halfspace_lab.polyhedron import (
    ActiveTriple,
    Cone,
    Tetrad,
    active_triple_at,
    cone_contains,
    cone_subset,
    enumerate_faces,
    face_dimension,
    is_bounded,
    is_empty,
    normal_cone,
    normal_fan_equal,
    open_interior_point,
    same_point_set,
    support_value,
    system_subset,
    tetrad_system,
)

U_EX = matrix([(-1, 0), (0, 1), (0, -1), (1, 1)])
TRI = Tetrad.of((0, 1, 0, 1))


def at(*ix):
    """1-based indices to a 0-based tuple."""
    return tuple(i - 1 for i in ix)


def test_tetrad_partition_is_enforced():
    with pytest.raises(InconsistentInput):
        Tetrad(vector((0, 1, 0, 1)), frozenset(), frozenset({1}), frozenset({1}))
    with pytest.raises(InconsistentInput):
        Tetrad(vector((0, 1)), frozenset(), frozenset({0}), frozenset())
    assert TRI.J == frozenset(range(4))


def test_emptiness():
    assert not is_empty(U_EX, TRI)
    assert is_empty([(1,), (1,)], Tetrad.of((0, 1), I=(0, 1)))


def test_open_interior_point():
    w = open_interior_point(U_EX, TRI)
    assert tetrad_system(U_EX, TRI, strict=True).satisfied_by(w)
    assert open_interior_point([(1,), (1,)], Tetrad.of((0, 0), J=(0,), K=(1,))) is None
    p = open_interior_point([(1, 0)], Tetrad.of((0,), I=(0,)))
    assert p[0] == 0


def test_boundedness():
    assert is_bounded(U_EX, TRI)
    assert not is_bounded([(-1, 0), (1, 1)], Tetrad.of((0, 1)))
    assert is_bounded([(1,)], Tetrad.of((0,), I=(0,)))
    with pytest.raises(EmptyPolyhedron):
        is_bounded([(1,), (1,)], Tetrad.of((0, 1), I=(0, 1)))


def test_support_value():
    assert support_value(U_EX, TRI, (0, 1)) == 1
    assert support_value(U_EX, TRI, (0, 0)) == 0
    assert support_value([(1,)], Tetrad.of((0,), K=(0,)), (1,)) == math.inf
    with pytest.raises(DimensionMismatch):
        support_value(U_EX, TRI, (1,))


def test_active_triple_at():
    assert active_triple_at(U_EX, TRI, (0, 0)).I == at(1, 3)
    assert active_triple_at(U_EX, TRI, (0, 1)).I == at(1, 2, 4)
    assert active_triple_at(U_EX, TRI, ("1/4", "1/4")).I == ()
    with pytest.raises(PointNotInPolyhedron):
        active_triple_at(U_EX, TRI, (2, 2))


def test_triangle_faces():
    faces = enumerate_faces(U_EX, TRI)
    got = sorted(f.active.I for f in faces)
    assert got == sorted([(), at(1), at(3), at(4), at(1, 3), at(3, 4), at(1, 2, 4)])
    assert [f.active for f in faces] == [f.active for f in enumerate_faces(U_EX, TRI, brute_force=True)]
    for f in faces:
        assert tetrad_system(U_EX, TRI, frozenset(f.active.I), strict=True).satisfied_by(f.witness)


def test_trivial_face_lists():
    single = enumerate_faces([(1, 1)], Tetrad.of((2,), I=(0,)))
    assert len(single) == 1 and single[0].dimension == 1
    assert enumerate_faces([(1,), (1,)], Tetrad.of((0, 1), I=(0, 1))) == []


def test_face_dimension():
    assert face_dimension(U_EX, ActiveTriple.of(at(1, 3), (), ())) == 0
    assert face_dimension(U_EX, ActiveTriple.of((), (), ())) == 2
    assert face_dimension(U_EX, ActiveTriple.of(at(4), (), ())) == 1


def test_normal_cones():
    vertex = normal_cone(U_EX, TRI, ActiveTriple.of(at(1, 3), at(2, 4), ()))
    assert set(vertex.rays) == {vector((-1, 0)), vector((0, -1))} and vertex.lineality == ()
    whole = normal_cone(U_EX, TRI, ActiveTriple.of((), range(4), ()))
    assert whole.rays == () and whole.lineality == ()
    eq = normal_cone([(1, 0), (0, 1)], Tetrad.of((0, 0), I=(0,)), ActiveTriple.of((0,), (1,), ()))
    assert vector((1, 0)) in eq.lineality


def test_normal_cone_matches_vertex_maximization():
    # (0,0) maximizes <d, .> over the triangle iff d lies in the closed third quadrant
    vertex = normal_cone(U_EX, TRI, ActiveTriple.of(at(1, 3), at(2, 4), ()))
    verts = [vector(p) for p in [(0, 0), (1, 0), (0, 1)]]
    rng = random.Random(3)
    for _ in range(60):
        d = vector((rng.randint(-3, 3), rng.randint(-3, 3)))
        best = max(d[0] * v[0] + d[1] * v[1] for v in verts)
        assert cone_contains(vertex, d) == (best == 0)


def test_cone_contains():
    c = Cone(2, (vector((-1, 0)), vector((0, -1))))
    assert cone_contains(c, (-1, -2))
    assert not cone_contains(c, (1, 0))
    assert cone_contains(Cone(2), (0, 0))


def test_normal_fan_examples():
    assert normal_fan_equal(U_EX, TRI, TRI.with_offset((0, 2, 0, 2)))
    assert not normal_fan_equal(U_EX, TRI, TRI.with_offset(("0", "3/4", "0", "1")))
    assert normal_fan_equal(U_EX, TRI, TRI)


def test_same_point_set_example():
    assert same_point_set(U_EX, TRI, TRI.with_offset(("0", "3/2", "0", "1")))
    assert not same_point_set(U_EX, TRI, TRI.with_offset((0, 2, 0, 2)))


def _random_tetrad(seed):
    rng = random.Random(seed)
    U, n = sampling.instance(rng, max_n=3, max_m=5)
    parts = sampling.partition(rng, len(U))
    a = sampling.point_in_cone(rng, U, parts)
    return U, n, sampling.tetrad(a, parts), rng


def _implicit_dimension(U, t, face, n, rng):
    """Affine dimension from LP maximizers over the closed face cut by a box around its witness."""
    closed = tetrad_system(U, t, frozenset(face.active.I), n=n)
    box = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        box += [Constraint(e, Rel.LE, face.witness[j] + 1), Constraint(e, Rel.GE, face.witness[j] - 1)]
    Q = MixedSystem(n, closed.rows + tuple(box))
    objectives = [tuple((1 if k == j else 0) * s for k in range(n)) for j in range(n) for s in (1, -1)]
    objectives += [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(3 * n)]
    pts = [face.witness]
    for c in objectives:
        out = optimize(c, Q)
        assert isinstance(out, Optimal)
        pts.append(out.point)
    return rank([sub(p, face.witness) for p in pts[1:]])


@settings(max_examples=25)
@given(st.integers(0, 10**9))
def test_dfs_matches_brute_force(seed):
    U, n, t, _ = _random_tetrad(seed)
    dfs = enumerate_faces(U, t, n=n)
    bf = enumerate_faces(U, t, brute_force=True, n=n)
    assert [f.active for f in dfs] == [f.active for f in bf]
    for f in dfs:
        assert set(f.active.I) >= t.I and set(f.active.J) <= t.J and set(f.active.K) <= t.K
        assert tetrad_system(U, t, frozenset(f.active.I), strict=True, n=n).satisfied_by(f.witness)


@settings(max_examples=20)
@given(st.integers(0, 10**9))
def test_dimension_against_oracle(seed):
    U, n, t, rng = _random_tetrad(seed)
    for f in enumerate_faces(U, t, n=n):
        assert f.dimension == _implicit_dimension(U, t, f, n, rng)


@settings(max_examples=20)
@given(st.integers(0, 10**9))
def test_facets_are_hyperplane_sections(seed):
    U, n, t, _ = _random_tetrad(seed)
    faces = enumerate_faces(U, t, n=n)
    if not faces:
        return
    top = max(f.dimension for f in faces)
    P = tetrad_system(U, t, n=n)
    for f in faces:
        if f.dimension != top - 1:
            continue
        extra = set(f.active.I) - t.I
        assert extra
        closed = tetrad_system(U, t, frozenset(f.active.I), n=n)
        found = False
        for j in extra:
            section = MixedSystem(n, P.rows + (Constraint(tuple(U[j]), Rel.EQ, t.a[j]),))
            if system_subset(section, closed) and system_subset(closed, section):
                found = True
        assert found


@settings(max_examples=15)
@given(st.integers(0, 10**9))
def test_face_order_reverses_normal_cones(seed):
    U, n, t, _ = _random_tetrad(seed)
    faces = enumerate_faces(U, t, n=n)
    cones = {f.active: normal_cone(U, t, f.active, n) for f in faces}
    for f1 in faces:
        for f2 in faces:
            contained = set(f2.active.I) <= set(f1.active.I)
            assert contained == cone_subset(cones[f2.active], cones[f1.active])


@settings(max_examples=10)
@given(st.integers(0, 10**9))
def test_same_derived_face_transports_faces_and_fans(seed):
    rng = random.Random(seed)
    U, n = sampling.instance(rng, max_n=3, max_m=5)
    a, b = sampling.same_face_pair(rng, U)
    parts = sampling.partition(rng, len(U))
    ta, tb = sampling.tetrad(a, parts), sampling.tetrad(b, parts)
    if is_empty(U, ta, n):
        assert is_empty(U, tb, n)
        return
    fa = {f.active for f in enumerate_faces(U, ta, n=n)}
    fb = {f.active for f in enumerate_faces(U, tb, n=n)}
    assert fa == fb
    assert normal_fan_equal(U, ta, tb, n)
    assert is_bounded(U, ta, n) == is_bounded(U, tb, n)


@settings(max_examples=15)
@given(st.integers(0, 10**9))
def test_equal_fans_give_isomorphic_face_posets(seed):
    rng = random.Random(seed)
    U, n = sampling.instance(rng, max_n=2, max_m=4)
    parts = sampling.partition(rng, len(U))
    ta = sampling.tetrad(sampling.point_in_cone(rng, U, parts), parts)
    tb = sampling.tetrad(sampling.point_in_cone(rng, U, parts), parts)
    if normal_fan_equal(U, ta, tb, n):
        assert isomorphic(_face_poset(U, ta, n), _face_poset(U, tb, n))


def _face_poset(U, t, n):
    faces = [f.active for f in enumerate_faces(U, t, n=n)]
    return Poset.from_order(faces, lambda f, g: f != g and set(g.I) <= set(f.I))


def test_equal_fans_need_not_share_active_triples():
    # one vertex is cut out by rows {3,4} for a and by rows {1,4} for b
    U = matrix([(-2, 2), (1, "3/2"), ("-1/3", -1), (-2, 0)])
    parts = (frozenset({3}), frozenset({1, 2}), frozenset({0}))
    ta = sampling.tetrad(vector((-1, "1/4", "1/6", 2)), parts)
    tb = sampling.tetrad(vector(("5/3", "13/4", "47/18", "2/3")), parts)
    assert normal_fan_equal(U, ta, tb)
    assert {f.active for f in enumerate_faces(U, ta)} != {f.active for f in enumerate_faces(U, tb)}
    assert isomorphic(_face_poset(U, ta, 2), _face_poset(U, tb, 2))
