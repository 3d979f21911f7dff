from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zpairs.field import QQ, FieldError, FieldScalar, FieldSpec, coerce, sqrt_of

FIELDS = [FieldSpec.quadratic(d) for d in (2, 3, 5, 7)]

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@st.composite
def scalars(draw, spec=None):
    spec = spec or draw(st.sampled_from(FIELDS))
    return FieldScalar(draw(rationals), draw(rationals), spec)


@st.composite
def triples(draw):
    spec = draw(st.sampled_from(FIELDS))
    return tuple(FieldScalar(draw(rationals), draw(rationals), spec) for _ in range(3))


@settings(max_examples=1000)
@given(triples())
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0 and x + 0 == x and x * 1 == x


@settings(max_examples=1000)
@given(scalars())
def test_inverse_and_norm(x):
    if not x:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert x * x.inverse() == 1
    assert 1 / x == x.inverse()
    assert (x * x.conjugate()).is_rational()
    assert x.norm() == (x * x.conjugate()).a


def _decimal_sign(x: FieldScalar) -> int:
    with localcontext() as ctx:
        ctx.prec = 120
        a = Decimal(int(x.a.numerator)) / Decimal(int(x.a.denominator))
        b = Decimal(int(x.b.numerator)) / Decimal(int(x.b.denominator))
        v = a + b * Decimal(x.d).sqrt()
    return (v > 0) - (v < 0)


@settings(max_examples=1000)
@given(scalars())
def test_sign_matches_high_precision(x):
    assert x.sign() == _decimal_sign(x)


@settings(max_examples=300)
@given(st.sampled_from(FIELDS), st.integers(1, 10**6), st.integers(1, 10**6))
def test_sign_near_cancellation(spec, p, q):
    # p - q*sqrt(d) with p close to q*sqrt(d)
    approx = int(q * spec.d ** 0.5)
    for a in (approx - 1, approx, approx + 1):
        x = FieldScalar(a, -q, spec)
        assert x.sign() == _decimal_sign(x)


@settings(max_examples=500)
@given(triples())
def test_order_is_consistent(xyz):
    x, y, _ = xyz
    assert (x < y) == (float(x) < float(y)) or abs(float(x) - float(y)) < 1e-9
    assert (x < y) + (x == y) + (x > y) == 1


def test_sqrt_squares_to_d():
    for spec in FIELDS:
        r = sqrt_of(spec)
        assert r * r == spec.d
        assert r.sign() == 1 and (-r).sign() == -1


def test_string_forms():
    q2 = FieldSpec.quadratic(2)
    assert str(FieldScalar(3, -2, q2)) == "3-2*sqrt2"
    assert str(FieldScalar(0, 1, q2)) == "sqrt2"
    assert str(FieldScalar(Fraction(1, 2), 0, QQ)) == "1/2"


def test_field_rules():
    with pytest.raises(FieldError):
        FieldSpec.quadratic(4)
    with pytest.raises(FieldError):
        FieldScalar(1, 1, QQ)
    with pytest.raises(FieldError):
        FieldScalar(1, 1, FIELDS[0]) + FieldScalar(1, 1, FIELDS[1])
    lifted = coerce(FieldScalar(3, 0, QQ), FIELDS[0])
    assert lifted.spec == FIELDS[0] and lifted == 3
    with pytest.raises(FieldError):
        coerce(FieldScalar(1, 1, FIELDS[0]), FIELDS[1])


def test_hash_agrees_with_rationals():
    assert hash(FieldScalar(Fraction(3, 4), 0, FIELDS[0])) == hash(FieldScalar(Fraction(3, 4)))
    assert FieldScalar(2) == 2 and FieldScalar(Fraction(1, 3)) == Fraction(1, 3)
