from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu.errors import BadParameter, NegativeValue, SchemaError, SpecMismatch
from mathieu.valuation import (Family, Order, OrderedGroupSpec, example_value, group_compare, is_anti_archimedean,
                               is_dominating, sampled_dominating_exists, strongly_simple_verdict,
                               unbounded_positive_exists, witness_holds)

Z = OrderedGroupSpec.integers()
LEX2 = OrderedGroupSpec.lex(2)
LEX3 = OrderedGroupSpec.lex(3)
ZT = OrderedGroupSpec.polynomials()
SPECS = [Z, LEX2, LEX3, ZT]


def elements(spec):
    ints = st.integers(-10**6, 10**6)
    if spec.family is Family.POLYNOMIALS:
        return st.lists(ints, max_size=6).map(spec.element)
    return st.lists(ints, min_size=spec.k, max_size=spec.k).map(spec.element)


def brute_compare(g, h):
    """Order by lexicographic comparison of the coordinate tuples read from the dominant end."""
    if g.spec.family is Family.POLYNOMIALS:
        n = max(len(g.coeffs), len(h.coeffs))
        a = tuple(reversed(g.coeffs + (0,) * (n - len(g.coeffs))))
        b = tuple(reversed(h.coeffs + (0,) * (n - len(h.coeffs))))
    else:
        a, b = g.coeffs, h.coeffs
    return Order((a > b) - (a < b))


def test_examples():
    assert group_compare(LEX2.element((0, 5)), LEX2.element((1, -100))) is Order.LESS
    t = ZT.element((0, 1))
    assert is_dominating(t) == (False, ZT.element((0, 0, 1)))
    assert is_dominating(Z.element(1)) == (True, None)
    assert is_dominating(LEX2.element((1, 0))) == (True, None)
    ok, h = is_dominating(LEX2.element((0, 1)))
    assert not ok and h == LEX2.element((1, 0))
    assert strongly_simple_verdict(Z) is False
    assert strongly_simple_verdict(LEX2) is False
    assert strongly_simple_verdict(ZT) is True


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: str(s.to_json()))
def test_compare_matches_tuple_order(spec):
    @settings(max_examples=200, deadline=None)
    @given(elements(spec), elements(spec))
    def check(g, h):
        assert group_compare(g, h) is brute_compare(g, h)
    check()


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: str(s.to_json()))
def test_order_is_translation_invariant(spec):
    @settings(max_examples=200, deadline=None)
    @given(elements(spec), elements(spec), elements(spec))
    def check(a, b, c):
        assert group_compare(a, b) is group_compare(a + c, b + c)
        assert (a - b) + b == a
        if a <= b and b <= c:
            assert a <= c
    check()


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: str(s.to_json()))
def test_non_dominating_witness_survives_thousand_multiples(spec):
    @settings(max_examples=100, deadline=None)
    @given(elements(spec))
    def check(g):
        ok, h = is_dominating(g)
        if ok:
            assert g.sign() > 0
        else:
            assert witness_holds(g, h, 1000)
    check()


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: str(s.to_json()))
def test_three_way_equivalence(spec):
    verdict = strongly_simple_verdict(spec)
    assert verdict is not sampled_dominating_exists(spec, samples=2000, seed=1)
    assert verdict is not unbounded_positive_exists(spec)


def test_anti_archimedean():
    assert is_anti_archimedean(ZT.element((5, 3)))[0]
    bound = is_anti_archimedean(ZT.element((5, 3)))[1]
    assert witness_holds(ZT.element((5, 3)), bound)
    assert not is_anti_archimedean(Z.element(2))[0]
    assert is_anti_archimedean(LEX2.element((0, 7)))[0]
    assert not is_anti_archimedean(LEX2.element((1, 0)))[0]
    assert is_anti_archimedean(Z.zero()) == (True, Z.zero())
    with pytest.raises(NegativeValue):
        is_anti_archimedean(ZT.element((0, -1)))


def test_example_values():
    assert example_value([1]) == ZT.element((1,))
    assert example_value([0, 1]) == ZT.element((0, 1))
    assert example_value([3, 2]) == ZT.element((3, 2))
    assert str(example_value([3, 2])) == "2t + 3"
    # x_1 < x_2 < x_3 in value
    assert example_value([1]) < example_value([0, 1]) < example_value([0, 0, 1])


def test_errors_and_json():
    with pytest.raises(SpecMismatch):
        group_compare(Z.element(1), LEX2.element((1, 0)))
    with pytest.raises(BadParameter):
        LEX2.element((1, 2, 3))
    with pytest.raises(BadParameter):
        OrderedGroupSpec.lex(0)
    for spec in SPECS:
        assert OrderedGroupSpec.from_json(spec.to_json()) == spec
    with pytest.raises(SchemaError):
        OrderedGroupSpec.from_json({"family": "reals"})
    with pytest.raises(SchemaError):
        OrderedGroupSpec.from_json({"family": "Z", "k": 2})
    assert ZT.element((1, 0, 0)).to_json() == [1]
