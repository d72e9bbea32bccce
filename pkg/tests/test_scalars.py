from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu.errors import BadParameter, RingMismatch
from mathieu.rings import RingSpec, Scalar, Unit, Zero, ZeroDivisor, ring_arithmetic, scalar_unit_status

Q = RingSpec.rationals()
Z12 = RingSpec.modular(12)


def test_rational_sum():
    x = Scalar(Q, Fraction(1, 2))
    y = Scalar(Q, Fraction(1, 3))
    assert ring_arithmetic(x, y, "add").value == Fraction(5, 6)


def test_modular_product():
    assert ring_arithmetic(Scalar(Z12, 7), Scalar(Z12, 5), "mul").value == 11


def test_additive_identity():
    x = Scalar(Z12, 9)
    assert ring_arithmetic(x, Scalar(Z12, 0), "add") == x


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ring_arithmetic(Scalar(Z12, 1), Scalar(RingSpec.modular(6), 1), "add")


def test_ring_validation():
    with pytest.raises(BadParameter):
        RingSpec.prime_field(9)
    with pytest.raises(BadParameter):
        RingSpec.modular(1)
    assert RingSpec.prime_field(7).is_field() and not Z12.is_field() and Q.is_field()
    assert Z12.is_finite() and not Q.is_finite()


def test_canonical_values():
    assert Scalar(Q, Fraction(4, -6)).value == Fraction(-2, 3)
    assert Scalar(Z12, -1).value == 11
    assert Q.format(Fraction(3, 1)) == "3" and Q.format(Fraction(-2, 3)) == "-2/3"
    assert Q.parse("-2/3") == Fraction(-2, 3)


def test_unit_status_examples():
    st5 = scalar_unit_status(Scalar(Z12, 5))
    assert isinstance(st5, Unit) and st5.inverse.value == 5
    assert isinstance(scalar_unit_status(Scalar(Z12, 6)), ZeroDivisor)
    assert isinstance(scalar_unit_status(Scalar(Q, 0)), Zero)
    assert isinstance(scalar_unit_status(Scalar(Q, Fraction(2, 7))), Unit)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 100), st.data())
def test_unit_status_matches_search(n, data):
    x = data.draw(st.integers(0, n - 1))
    ring = RingSpec.modular(n)
    status = scalar_unit_status(Scalar(ring, x))
    has_inverse = any(x * y % n == 1 for y in range(n))
    assert isinstance(status, Unit) == has_inverse
    if isinstance(status, Unit):
        assert x * status.inverse.value % n == 1
    elif x == 0:
        assert isinstance(status, Zero)
    else:
        assert any(x * y % n == 0 for y in range(1, n))


def test_json_round_trip():
    for ring in (Q, Z12, RingSpec.prime_field(5)):
        assert RingSpec.from_json(ring.to_json()) == ring
