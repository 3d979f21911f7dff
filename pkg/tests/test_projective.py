from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from zpairs.combinatorics import combinatorics_of_arrangement, combinatorics_of_points
from zpairs.field import FieldScalar, FieldSpec
from zpairs.projective import (GeometryError, Line, Point, Transform, collinear, concurrent,
                               conic_through_five, det3, dualize, join, mat_inverse, mat_mul, meet,
                               null_space, rank, transform_to_frame)

Q2 = FieldSpec.quadratic(2)
small = st.integers(-6, 6)


@st.composite
def points(draw, spec="any"):
    if spec == "any":
        spec = draw(st.sampled_from([None, Q2]))
    if spec is None:
        vals = [draw(small) for _ in range(3)]
        assume(any(vals))
        return Point(*vals)
    vals = [FieldScalar(draw(small), draw(small), spec) for _ in range(3)]
    assume(any(vals))
    return Point(*vals)


@st.composite
def point_pairs(draw):
    spec = draw(st.sampled_from([None, Q2]))
    p, q = draw(points(spec)), draw(points(spec))
    assume(p != q)
    return p, q


@settings(max_examples=1000)
@given(points())
def test_duality_is_an_involution(p):
    l = dualize(p)
    assert isinstance(l, Line)
    back = dualize(l)
    assert isinstance(back, Point) and back == p


@settings(max_examples=1000)
@given(point_pairs())
def test_join_meet_duality(pq):
    p, q = pq
    l = join(p, q)
    assert l.contains(p) and l.contains(q)
    assert dualize(l) == meet(dualize(p), dualize(q))
    # incidence is symmetric under duality
    r = Point(1, 2, 3, spec=p.spec)
    assert l.contains(r) == dualize(r).contains(dualize(l))


@settings(max_examples=1000)
@given(point_pairs(), point_pairs())
def test_meet_lies_on_both(pq, rs):
    p, q = pq
    r, s = rs
    assume(p.spec == r.spec)
    l, m = join(p, q), join(r, s)
    assume(l != m)
    x = meet(l, m)
    assert l.contains(x) and m.contains(x)


@settings(max_examples=1000)
@given(st.lists(points(spec=None), min_size=4, max_size=8, unique=True))
def test_combinatorics_duality(pts):
    # collinear point sets and concurrent dual line sets are the same index sets
    assert combinatorics_of_points(pts) == combinatorics_of_arrangement([dualize(p) for p in pts])


@settings(max_examples=300)
@given(st.lists(points(spec=None), min_size=3, max_size=3))
def test_collinear_matches_determinant(pts):
    p, q, r = pts
    assert collinear(p, q, r) == (det3((p.coords, q.coords, r.coords)) == 0)
    assert collinear(p, q, r) == concurrent(dualize(p), dualize(q), dualize(r))


@settings(max_examples=300)
@given(st.lists(points(spec=None), min_size=4, max_size=4, unique=True), points(spec=None))
def test_transform_preserves_incidence(frame, p):
    p1, p2, p3, p4 = frame
    assume(all(not collinear(a, b, c) for a, b, c in
               [(p1, p2, p3), (p1, p2, p4), (p1, p3, p4), (p2, p3, p4)]))
    T = transform_to_frame(p1, p2, p3, p4)
    assert T(p1) == Point(1, 0, 0) and T(p4) == Point(1, 1, 1)
    if p != p1:
        assert T(join(p1, p)).contains(T(p))
    assert T.inverse()(T(p)) == p


def test_canonical_scaling():
    assert Point(2, 4, -6) == Point(1, 2, -3)
    assert Point(0, -3, 3).coords == (0, 1, -1)
    with pytest.raises(GeometryError):
        Point(0, 0, 0)


def test_join_of_equal_points_fails():
    with pytest.raises(GeometryError):
        join(Point(1, 2, 3), Point(2, 4, 6))


def test_conic_through_five():
    # the unit circle x^2 + y^2 = z^2
    pts = [Point(1, 0, 1), Point(0, 1, 1), Point(-1, 0, 1), Point(0, -1, 1), Point(3, 4, 5)]
    c = conic_through_five(pts)
    assert c.contains(Point(5, 12, 13)) and not c.contains(Point(1, 1, 1))
    assert c.is_smooth()
    degenerate = conic_through_five([Point(0, 0, 1), Point(1, 0, 1), Point(2, 0, 1),
                                     Point(0, 1, 1), Point(0, 2, 1)])
    assert not degenerate.is_smooth()


def test_linear_algebra():
    m = [[FieldScalar(v) for v in row] for row in ((2, 1, 0), (1, 3, 1), (0, 1, 4))]
    inv = mat_inverse(m)
    assert [list(r) for r in mat_mul(m, inv)] == [[int(i == j) for j in range(3)] for i in range(3)]
    singular = [[FieldScalar(v) for v in row] for row in ((1, 2, 3), (2, 4, 6), (1, 0, 1))]
    assert rank(singular) == 2
    (k,) = null_space(singular)
    assert all(sum((r[i] * k[i] for i in range(3)), FieldScalar(0)) == 0 for r in singular)


def test_quadratic_points():
    r = FieldScalar(0, 1, Q2)
    p = Point(r, FieldScalar(1, 0, Q2), FieldScalar(0, 0, Q2))
    assert p.conjugate() == Point(-r, FieldScalar(1, 0, Q2), FieldScalar(0, 0, Q2))
    assert p.swap_xy().coords[0] == 1
    assert Transform.identity(Q2)(p) == p
    assert Fraction(1, 2) * r * r == 1
